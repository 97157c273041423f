#include <kirby/handlebody.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace kirby {

namespace {

using Index = Eigen::Index;

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

template <class M>
M drop_row(const M& m, Index r) {
  M out(m.rows() - 1, m.cols());
  for (Index i = 0, o = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    out.row(o++) = m.row(i);
  }
  return out;
}

template <class M>
M drop_col(const M& m, Index c) {
  M out(m.rows(), m.cols() - 1);
  for (Index j = 0, o = 0; j < m.cols(); ++j) {
    if (j == c) continue;
    out.col(o++) = m.col(j);
  }
  return out;
}

std::string count_word(std::size_t n) {
  static const std::array<const char*, 11> words = {
      "zero", "one", "two", "three", "four", "five",
      "six",  "seven", "eight", "nine", "ten"};
  return n < words.size() ? words[n] : std::to_string(n);
}

// Applies `multiplier` consecutive slides of handle i over handle j with the
// sign of `multiplier`: row_i += c row_j, col_i += c col_j, and the same on
// the incidence column. Repeated slides compose to a single elementary
// congruence because the elementary matrix is unipotent.
void slide_multiple(HandleDecomposition& x, Index i, Index j, const Integer& multiplier) {
  if (multiplier == 0) return;
  const ExtInt c(multiplier);
  const ExtMatrix& l = x.linking();
  const Index n = static_cast<Index>(x.two_handle_count());

  std::vector<ExtInt> row(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) row[k] = l(i, k) + c * l(j, k);
  // After the row operation, column i gains c * column j (which now has the
  // updated entry at position i).
  const ExtInt ji_after = row[j];
  ExtInt ii = row[i] + c * ji_after;
  for (Index k = 0; k < n; ++k) {
    if (k == i) continue;
    x.set_linking(i, k, row[k]);
  }
  x.set_linking(i, i, ii);

  for (Index d = 0; d < x.incidence().rows(); ++d) {
    const Integer updated = x.incidence()(d, i) + multiplier * x.incidence()(d, j);
    x.set_incidence(d, i, updated);
  }
  x.set_knot(i, KnotTag::Unknown);
}

}  // namespace

std::string to_string(KnotTag tag) {
  switch (tag) {
    case KnotTag::Unknot: return "unknot";
    case KnotTag::RightTrefoil: return "right-trefoil";
    case KnotTag::Unknown: return "?";
  }
  return "?";
}

KnotTag parse_knot_tag(std::string_view text) {
  if (text == "unknot") return KnotTag::Unknot;
  if (text == "right-trefoil") return KnotTag::RightTrefoil;
  if (text == "?") return KnotTag::Unknown;
  throw Error(ErrorKind::Format, "unknown knot tag '" + std::string(text) + "'");
}

Sign sign_from_int(int s) {
  if (s == 1) return Sign::Plus;
  if (s == -1) return Sign::Minus;
  throw Error(ErrorKind::Domain, "sign must be +1 or -1, got " + std::to_string(s));
}

std::string HandleCounts::to_string() const {
  std::ostringstream out;
  out << "(" << h0 << ", " << h1 << ", " << h2 << ", " << h3 << ", " << h4 << ")";
  return out.str();
}

std::string HandleCounts::union_expression() const {
  const std::array<std::size_t, 5> c = {h0, h1, h2, h3, h4};
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += " ∪ ";
    out += count_word(c[k]) + " " + std::to_string(k) + "-handle" + (c[k] == 1 ? "" : "s");
  }
  return out.empty() ? "empty" : out;
}

HandleDecomposition::HandleDecomposition(std::size_t h0, std::vector<std::string> one_handles,
                                         std::vector<TwoHandle> two_handles, ExtMatrix linking,
                                         IntMatrix incidence, std::size_t h3, std::size_t h4)
    : h0_(h0), h3_(h3), h4_(h4) {
  if (h0 < 1) throw Error(ErrorKind::Domain, "a decomposition needs at least one 0-handle");
  const auto n = static_cast<Index>(two_handles.size());
  const auto m = static_cast<Index>(one_handles.size());
  if (linking.rows() != n || linking.cols() != n)
    throw Error(ErrorKind::Domain, "linking matrix must be " + std::to_string(n) + "x" +
                                       std::to_string(n));
  if (incidence.rows() != m || incidence.cols() != n)
    throw Error(ErrorKind::Domain, "incidence matrix must be " + std::to_string(m) + "x" +
                                       std::to_string(n));
  for (Index i = 0; i < n; ++i) {
    if (!kirby::identical(linking(i, i), two_handles[i].framing))
      throw Error(ErrorKind::Domain, "linking diagonal disagrees with framing of '" +
                                         two_handles[i].label + "'");
    for (Index j = i + 1; j < n; ++j)
      if (!kirby::identical(linking(i, j), linking(j, i)))
        throw Error(ErrorKind::Domain, "linking matrix is not symmetric");
  }
  for (auto& label : one_handles) {
    check_new_label(label);
    one_handles_.push_back(std::move(label));
  }
  for (auto& h : two_handles) {
    check_new_label(h.label);
    labels_.push_back(std::move(h.label));
    knots_.push_back(h.knot);
  }
  linking_ = std::move(linking);
  incidence_ = std::move(incidence);
}

TwoHandle HandleDecomposition::two_handle(Index i) const {
  return {labels_[static_cast<std::size_t>(i)], linking_(i, i), knot(i)};
}

std::vector<TwoHandle> HandleDecomposition::two_handles() const {
  std::vector<TwoHandle> out;
  for (Index i = 0; i < static_cast<Index>(labels_.size()); ++i) out.push_back(two_handle(i));
  return out;
}

bool HandleDecomposition::has_label(std::string_view label) const {
  return find_two(label) || find_one(label);
}

std::optional<Index> HandleDecomposition::find_two(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

std::optional<Index> HandleDecomposition::find_one(std::string_view label) const {
  auto it = std::find(one_handles_.begin(), one_handles_.end(), label);
  if (it == one_handles_.end()) return std::nullopt;
  return static_cast<Index>(it - one_handles_.begin());
}

Index HandleDecomposition::index_of_two(std::string_view label) const {
  if (auto i = find_two(label)) return *i;
  throw Error(ErrorKind::MissingLabel, "no 2-handle labelled '" + std::string(label) + "'");
}

Index HandleDecomposition::index_of_one(std::string_view label) const {
  if (auto i = find_one(label)) return *i;
  throw Error(ErrorKind::MissingLabel, "no 1-handle labelled '" + std::string(label) + "'");
}

std::string HandleDecomposition::fresh_two_label() const {
  for (std::size_t n = 1;; ++n) {
    std::string label = "k" + std::to_string(n);
    if (!has_label(label)) return label;
  }
}

std::string HandleDecomposition::fresh_one_label() const {
  for (std::size_t n = 1;; ++n) {
    std::string label = "d" + std::to_string(n);
    if (!has_label(label)) return label;
  }
}

void HandleDecomposition::check_new_label(const std::string& label) const {
  if (!is_identifier(label))
    throw Error(ErrorKind::Domain, "handle label '" + label + "' is not an identifier");
  if (has_label(label))
    throw Error(ErrorKind::DuplicateLabel, "handle label '" + label + "' is already in use");
}

Index HandleDecomposition::add_two_handle(TwoHandle handle) {
  check_new_label(handle.label);
  const Index n = static_cast<Index>(labels_.size());
  ExtMatrix linking(n + 1, n + 1);
  linking.topLeftCorner(n, n) = linking_;
  for (Index k = 0; k < n; ++k) {
    linking(n, k) = ExtInt(0);
    linking(k, n) = ExtInt(0);
  }
  linking(n, n) = handle.framing;
  linking_ = std::move(linking);

  IntMatrix incidence(incidence_.rows(), n + 1);
  incidence.leftCols(n) = incidence_;
  for (Index d = 0; d < incidence.rows(); ++d) incidence(d, n) = 0;
  incidence_ = std::move(incidence);

  labels_.push_back(std::move(handle.label));
  knots_.push_back(handle.knot);
  return n;
}

Index HandleDecomposition::add_one_handle(std::string label) {
  check_new_label(label);
  const Index m = incidence_.rows();
  IntMatrix incidence(m + 1, incidence_.cols());
  incidence.topRows(m) = incidence_;
  for (Index k = 0; k < incidence.cols(); ++k) incidence(m, k) = 0;
  incidence_ = std::move(incidence);
  one_handles_.push_back(std::move(label));
  return m;
}

void HandleDecomposition::remove_two_handle(Index i) {
  linking_ = drop_col(drop_row(linking_, i), i);
  incidence_ = drop_col(incidence_, i);
  labels_.erase(labels_.begin() + i);
  knots_.erase(knots_.begin() + i);
}

void HandleDecomposition::remove_one_handle(Index d) {
  incidence_ = drop_row(incidence_, d);
  one_handles_.erase(one_handles_.begin() + d);
}

void HandleDecomposition::set_linking(Index i, Index j, const ExtInt& value) {
  linking_(i, j) = value;
  linking_(j, i) = value;
}

void HandleDecomposition::set_incidence(Index d, Index k, const Integer& value) {
  incidence_(d, k) = value;
}

void HandleDecomposition::rename_two_handle(Index i, std::string label) {
  if (labels_[static_cast<std::size_t>(i)] == label) return;
  check_new_label(label);
  labels_[static_cast<std::size_t>(i)] = std::move(label);
}

void HandleDecomposition::mark_unknown(Index i) {
  for (Index k = 0; k < linking_.rows(); ++k) set_linking(i, k, ExtInt::unknown());
}

bool HandleDecomposition::identical(const HandleDecomposition& other) const {
  return h0_ == other.h0_ && h3_ == other.h3_ && h4_ == other.h4_ &&
         one_handles_ == other.one_handles_ && labels_ == other.labels_ &&
         knots_ == other.knots_ && kirby::identical(linking_, other.linking_) &&
         incidence_.rows() == other.incidence_.rows() &&
         incidence_.cols() == other.incidence_.cols() && incidence_ == other.incidence_;
}

HandleCounts counts(const HandleDecomposition& x) {
  return {x.h0(), x.one_handles().size(), x.two_handle_count(), x.h3(), x.h4()};
}

long long euler_characteristic(const HandleDecomposition& x) {
  return counts(x).euler_characteristic();
}

HandleDecomposition handle_slide(const HandleDecomposition& x, std::string_view handle,
                                 std::string_view over, Sign sign) {
  const Index i = x.index_of_two(handle);
  const Index j = x.index_of_two(over);
  if (i == j)
    throw Error(ErrorKind::Domain, "cannot slide '" + std::string(handle) + "' over itself");
  HandleDecomposition out = x;
  slide_multiple(out, i, j, Integer(to_int(sign)));
  return out;
}

HandleDecomposition reverse_orientation(const HandleDecomposition& x, std::string_view handle) {
  const Index i = x.index_of_two(handle);
  HandleDecomposition out = x;
  for (Index k = 0; k < static_cast<Index>(x.two_handle_count()); ++k)
    if (k != i) out.set_linking(i, k, -x.linking()(i, k));
  for (Index d = 0; d < x.incidence().rows(); ++d)
    out.set_incidence(d, i, -x.incidence()(d, i));
  return out;
}

HandleDecomposition blow_up(const HandleDecomposition& x, Sign sign, std::string label) {
  HandleDecomposition out = x;
  if (label.empty()) label = out.fresh_two_label();
  out.add_two_handle({std::move(label), ExtInt(to_int(sign)), KnotTag::Unknot});
  return out;
}

HandleDecomposition blow_down(const HandleDecomposition& x, std::string_view handle,
                              bool strict) {
  const Index i = x.index_of_two(handle);
  const ExtInt& f = x.framing(i);
  if (!(f.is(1) || f.is(-1)))
    throw Error(ErrorKind::FramingNotUnit, "cannot blow down '" + std::string(handle) +
                                               "': framing " + f.to_string() +
                                               " is not ±1");
  if (strict) {
    if (x.knot(i) != KnotTag::Unknot)
      throw Error(ErrorKind::StrictnessViolation,
                  "strict blow-down of '" + std::string(handle) + "' needs a certified unknot");
    for (Index d = 0; d < x.incidence().rows(); ++d)
      if (x.incidence()(d, i) != 0)
        throw Error(ErrorKind::StrictnessViolation,
                    "strict blow-down of '" + std::string(handle) + "' runs over a 1-handle");
  }

  const Integer framing = f.value();
  HandleDecomposition out = x;
  for (Index j = 0; j < static_cast<Index>(x.two_handle_count()); ++j) {
    if (j == i) continue;
    const ExtInt& m = out.linking()(j, i);
    if (m.is_unknown())
      throw Error(ErrorKind::UnknownLinking, "cannot clear Unknown linking between '" +
                                                 x.two_handle_labels()[j] + "' and '" +
                                                 std::string(handle) + "'");
    // Each slide with sign -sign(m)*framing moves the linking one step to 0.
    slide_multiple(out, j, i, Integer(-m.value() * framing));
  }
  out.remove_two_handle(i);
  return out;
}

HandleDecomposition cancel_12(const HandleDecomposition& x, std::string_view dotted,
                              std::string_view meridian) {
  const Index d = x.index_of_one(dotted);
  const Index k = x.index_of_two(meridian);
  const Integer e = x.incidence()(d, k);
  if (abs(e) != 1)
    throw Error(ErrorKind::NonMeridian, "'" + std::string(meridian) + "' runs over '" +
                                            std::string(dotted) + "' " + e.str() +
                                            " times, not once");
  HandleDecomposition out = x;
  std::vector<Index> slid;
  for (Index j = 0; j < static_cast<Index>(x.two_handle_count()); ++j) {
    if (j == k) continue;
    const Integer m = out.incidence()(d, j);
    if (m == 0) continue;
    slide_multiple(out, j, k, Integer(-m * e));
    slid.push_back(j);
  }
  for (Index j : slid) out.mark_unknown(j);
  out.remove_two_handle(k);
  out.remove_one_handle(d);
  return out;
}

HandleDecomposition add_three_handles(const HandleDecomposition& x, std::size_t k) {
  HandleDecomposition out = x;
  out.set_h3(x.h3() + k);
  return out;
}

HandleDecomposition add_four_handle(const HandleDecomposition& x) {
  if (x.h4() != 0)
    throw Error(ErrorKind::DuplicateFourHandle, "decomposition already has a 4-handle");
  HandleDecomposition out = x;
  out.set_h4(1);
  return out;
}

HandleDecomposition direct_sum(const HandleDecomposition& a, const HandleDecomposition& b) {
  HandleDecomposition out = a;
  const Index n = static_cast<Index>(a.two_handle_count());
  const Index m = static_cast<Index>(a.one_handles().size());
  for (const auto& label : b.one_handles()) out.add_one_handle(label);
  for (const auto& h : b.two_handles()) out.add_two_handle(h);
  for (Index i = 0; i < static_cast<Index>(b.two_handle_count()); ++i) {
    for (Index j = i + 1; j < static_cast<Index>(b.two_handle_count()); ++j)
      out.set_linking(n + i, n + j, b.linking()(i, j));
    for (Index d = 0; d < b.incidence().rows(); ++d)
      out.set_incidence(m + d, n + i, b.incidence()(d, i));
  }
  out.set_h3(a.h3() + b.h3());
  out.set_h4(a.h4() + b.h4());
  return out;
}

AbelianGroup homology_h1(const HandleDecomposition& x) {
  if (x.one_handles().empty()) return {};
  return AbelianGroup::cokernel(x.incidence());
}

IntMatrix known_linking(const HandleDecomposition& x) {
  if (!all_known(x.linking()))
    throw Error(ErrorKind::UnknownEntries, "linking matrix has Unknown entries");
  return to_int_matrix(x.linking());
}

std::optional<Integer> boundary_h1_order(const HandleDecomposition& x) {
  if (!x.one_handles().empty())
    throw Error(ErrorKind::HasOneHandles, "boundary order needs a decomposition without 1-handles");
  if (x.h3() != 0 || x.h4() != 0)
    throw Error(ErrorKind::HasHigherHandles,
                "boundary order needs a decomposition without 3- or 4-handles");
  const Integer det = determinant(known_linking(x));
  if (det == 0) return std::nullopt;
  return abs(det);
}

}  // namespace kirby
