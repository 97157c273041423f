#pragma once

// Test helpers and independent oracles. Nothing here calls into the library's
// elimination code.

#include <kirby/handlebody.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <initializer_list>
#include <random>
#include <vector>

namespace kirby::test {

inline IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

inline IntMatrix diag(std::initializer_list<long long> d) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (long long v : d) m(i, i) = Integer(v), ++i;
  return m;
}

inline bool same(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.rows() == 0 || a.cols() == 0 || a == b);
}

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, Eigen::Index r, Eigen::Index c, long long bound) {
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Integer(uniform(rng, -bound, bound));
  return m;
}

inline IntMatrix random_symmetric(Rng& rng, Eigen::Index n, long long bound) {
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = Integer(uniform(rng, -bound, bound));
  return m;
}

/// Product of random elementary row operations; determinant ±1.
inline IntMatrix random_unimodular(Rng& rng, Eigen::Index n, int steps) {
  IntMatrix e = IntMatrix::Identity(n, n);
  if (n == 0) return e;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<Eigen::Index>(uniform(rng, 0, n - 1));
    const auto j = static_cast<Eigen::Index>(uniform(rng, 0, n - 1));
    if (i == j) {
      e.row(i) = (-e.row(i)).eval();
    } else {
      const Integer c(uniform(rng, -2, 2));
      e.row(i) = (e.row(i) + c * e.row(j)).eval();
    }
  }
  return e;
}

/// Cofactor expansion along the first row.
inline Integer laplace_det(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * laplace_det(minor);
    total += (j % 2 ? -term : term);
  }
  return total;
}

inline Integer int_gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, where
/// D_k is the gcd of all k x k minors. Returns min(rows, cols) entries.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  bool zero_from_here = false;
  for (int k = 1; k <= std::min(r, c); ++k) {
    if (zero_from_here) {
      out.push_back(0);
      continue;
    }
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        IntMatrix sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
        g = int_gcd(g, laplace_det(sub));
      }
    if (g == 0) {
      zero_from_here = true;
      out.push_back(0);
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Rank over Q from the determinantal divisors.
inline Eigen::Index rank_of(const IntMatrix& m) {
  Eigen::Index rank = 0;
  for (const auto& d : invariant_factors(m)) rank += d != 0;
  return rank;
}

/// Signature by floating-point eigenvalues, with the zero count fixed
/// exactly by the rank. Only for small matrices with small entries.
inline Inertia float_inertia(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  Inertia out;
  if (n == 0) return out;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j).convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  const auto zeros = static_cast<std::size_t>(n - rank_of(m));
  out.zero = zeros;
  for (std::size_t i = zeros; i < ev.size(); ++i) (ev[i] > 0 ? out.positive : out.negative) += 1;
  return out;
}

/// Independent HJ evaluation with explicit fractions, from the last term.
inline std::pair<Integer, Integer> hj_value(const std::vector<Integer>& a) {
  Integer num = a.back(), den = 1;
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
    // *it - den/num
    Integer n2 = *it * num - den, d2 = num;
    num = n2;
    den = d2;
  }
  if (den < 0) num = -num, den = -den;
  const Integer g = int_gcd(num, den);
  return {num / g, den / g};
}

inline ExtMatrix ext(const IntMatrix& m) { return to_ext_matrix(m); }

/// All 2-handles unknotted, no 1-/3-/4-handles, labels k1...
inline HandleDecomposition from_linking(const IntMatrix& m) {
  std::vector<TwoHandle> hs;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    hs.push_back({"k" + std::to_string(i + 1), m(i, i), KnotTag::Unknot});
  return HandleDecomposition(1, {}, hs, ext(m), IntMatrix(0, m.rows()), 0, 0);
}

}  // namespace kirby::test
