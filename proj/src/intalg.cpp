#include <kirby/intalg.hpp>

#include <sstream>

namespace kirby {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::MissingLabel: return "missing-label";
    case ErrorKind::DuplicateLabel: return "duplicate-label";
    case ErrorKind::FramingNotUnit: return "framing-not-unit";
    case ErrorKind::StrictnessViolation: return "strictness-violation";
    case ErrorKind::UnknownLinking: return "unknown-linking";
    case ErrorKind::NonMeridian: return "non-meridian";
    case ErrorKind::DuplicateFourHandle: return "duplicate-4-handle";
    case ErrorKind::HasOneHandles: return "has-1-handles";
    case ErrorKind::HasHigherHandles: return "has-3-or-4-handles";
    case ErrorKind::UnknownEntries: return "unknown-entries";
    case ErrorKind::ShapeViolation: return "shape-violation";
    case ErrorKind::UnsupportedPair: return "unsupported-pair";
    case ErrorKind::Format: return "format";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw Error(ErrorKind::Domain, "torsion coefficient below 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw Error(ErrorKind::Domain, "torsion coefficients break the divisibility chain");
  }
}

AbelianGroup AbelianGroup::cokernel(const IntMatrix& m) {
  const auto smith = smith_normal_form(m);
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  for (const Integer& d : smith.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) torsion.push_back(d);
  }
  return AbelianGroup(static_cast<std::size_t>(m.rows()) - rank, std::move(torsion));
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << "Z";
    if (free_rank_ > 1) out << "^" << free_rank_;
    first = false;
  }
  for (const Integer& d : torsion_) {
    if (!first) out << " + ";
    out << "Z/" << d;
    first = false;
  }
  return out.str();
}

std::vector<Integer> hj_continued_fraction(const Integer& p, const Integer& q) {
  if (!(q > 0 && q < p) || gcd(p, q) != 1)
    throw Error(ErrorKind::Domain,
                "continued fraction needs 0 < q < p with gcd(p, q) = 1, got p = " +
                    to_string(p) + ", q = " + to_string(q));
  std::vector<Integer> out;
  Integer num = p;
  Integer den = q;
  while (den != 0) {
    Integer a = (num + den - 1) / den;
    Integer rest = a * den - num;
    out.push_back(a);
    num = den;
    den = rest;
  }
  return out;
}

std::pair<Integer, Integer> evaluate_hj(const std::vector<Integer>& coeffs) {
  if (coeffs.empty())
    throw Error(ErrorKind::Domain, "empty continued fraction");
  Integer num = coeffs.back();
  Integer den = 1;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (num == 0)
      throw Error(ErrorKind::DivisionByZero,
                  "continued fraction tail evaluates to zero at term " +
                      std::to_string(i + 2));
    Integer next = coeffs[i] * num - den;
    den = num;
    num = next;
  }
  if (num == 0) return {Integer(0), Integer(1)};
  Integer g = gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

}  // namespace kirby
