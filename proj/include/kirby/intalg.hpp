#pragma once

// Exact integer linear algebra over dense Eigen matrices.
//
// Every routine is templated on the scalar so the algorithms can be checked
// against machine integers in tests, but the engine itself only ever
// instantiates them with kirby::Integer. No routine divides inexactly and no
// floating point is involved anywhere.

#include <kirby/error.hpp>
#include <kirby/integer.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kirby {

namespace detail {

template <class Scalar>
Scalar abs_value(const Scalar& v) {
  return v < Scalar(0) ? Scalar(-v) : v;
}

template <class Scalar>
int sign_of(const Scalar& v) {
  return (v > Scalar(0)) - (v < Scalar(0));
}

template <class Scalar>
Scalar gcd_of(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != Scalar(0)) {
    Scalar r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Divides the matrix by the gcd of its entries. Positive scaling keeps the
// inertia of a symmetric matrix unchanged.
template <class Scalar>
void remove_content(DenseMatrix<Scalar>& m) {
  Scalar g(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      g = gcd_of<Scalar>(g, m(i, j));
      if (g == Scalar(1)) return;
    }
  if (g > Scalar(1))
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) /= g;
}

template <class Scalar>
DenseMatrix<Scalar> drop_indices(const DenseMatrix<Scalar>& m,
                                 const std::vector<Eigen::Index>& drop) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    bool dropped = false;
    for (auto d : drop) dropped = dropped || d == i;
    if (!dropped) keep.push_back(i);
  }
  const auto n = static_cast<Eigen::Index>(keep.size());
  DenseMatrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(keep[i], keep[j]);
  return out;
}

}  // namespace detail

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

template <class Scalar>
struct SmithDecomposition {
  DenseMatrix<Scalar> u;  // rows x rows, unimodular
  DenseMatrix<Scalar> d;  // rows x cols, diagonal with d1 | d2 | ...
  DenseMatrix<Scalar> v;  // cols x cols, unimodular

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < std::min(d.rows(), d.cols()); ++i)
      out.push_back(d(i, i));
    return out;
  }
};

/// Smith normal form with transforms: u * m * v == d.
///
/// Pivots are chosen by minimal absolute value over the trailing block, which
/// keeps intermediate entries small on the matrices this engine produces.
template <class Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const Index rows = m.rows();
  const Index cols = m.cols();

  SmithDecomposition<Scalar> out;
  out.d = m;
  out.u = DenseMatrix<Scalar>::Identity(rows, rows);
  out.v = DenseMatrix<Scalar>::Identity(cols, cols);
  auto& d = out.d;
  auto& u = out.u;
  auto& v = out.v;

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      Index pr = -1, pc = -1;
      Scalar best(0);
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j) {
          if (d(i, j) == Scalar(0)) continue;
          Scalar a = detail::abs_value<Scalar>(d(i, j));
          if (pr < 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) return out;  // trailing block is zero

      if (pr != t) {
        d.row(t).swap(d.row(pr));
        u.row(t).swap(u.row(pr));
      }
      if (pc != t) {
        d.col(t).swap(d.col(pc));
        v.col(t).swap(v.col(pc));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == Scalar(0)) continue;
        const Scalar q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        u.row(i) -= q * u.row(t);
        clean = clean && d(i, t) == Scalar(0);
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == Scalar(0)) continue;
        const Scalar q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        v.col(j) -= q * v.col(t);
        clean = clean && d(t, j) == Scalar(0);
      }
      if (!clean) continue;

      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      u.row(t) += u.row(bad);
    }
    if (d(t, t) < Scalar(0)) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return out;
}

/// Exact determinant by Bareiss fraction-free elimination.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  if (m.rows() != m.cols())
    throw Error(ErrorKind::Domain, "determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);

  DenseMatrix<Scalar> a = m;
  Scalar prev(1);
  int flips = 0;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index swap_with = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != Scalar(0)) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_with));
      ++flips;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return flips % 2 ? Scalar(-det) : det;
}

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  long long signature() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia indices (n+, n0, n-) of a symmetric integer matrix.
///
/// Congruence diagonalization without fractions: a nonzero diagonal pivot
/// splits off a 1x1 block, and when the remaining diagonal vanishes a nonzero
/// off-diagonal entry splits off a hyperbolic 2x2 block (one +, one -). Each
/// Schur complement is rescaled by a positive factor to stay integral.
template <class Derived>
Inertia signature(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  if (!is_symmetric(m))
    throw Error(ErrorKind::Domain, "signature of a non-symmetric matrix");

  Inertia out;
  DenseMatrix<Scalar> a = m;
  while (a.rows() > 0) {
    const Index n = a.rows();
    Index k = -1;
    for (Index i = 0; i < n; ++i) {
      if (a(i, i) == Scalar(0)) continue;
      if (k < 0 || detail::abs_value<Scalar>(a(i, i)) <
                       detail::abs_value<Scalar>(a(k, k)))
        k = i;
    }

    if (k >= 0) {
      const Scalar pivot = a(k, k);
      (pivot > Scalar(0) ? out.positive : out.negative)++;
      const Scalar scale = detail::abs_value(pivot);
      const Scalar s(detail::sign_of(pivot));
      DenseMatrix<Scalar> next = a;
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          next(i, j) = scale * a(i, j) - s * a(i, k) * a(k, j);
      a = detail::drop_indices(next, {k});
      detail::remove_content(a);
      continue;
    }

    Index p = -1, q = -1;
    for (Index i = 0; i < n && p < 0; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (a(i, j) != Scalar(0)) {
          p = i;
          q = j;
          break;
        }
    if (p < 0) {
      out.zero += static_cast<std::size_t>(n);
      break;
    }

    ++out.positive;
    ++out.negative;
    const Scalar b = a(p, q);
    const Scalar scale = detail::abs_value(b);
    const Scalar s(detail::sign_of(b));
    DenseMatrix<Scalar> next = a;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        next(i, j) =
            scale * a(i, j) - s * (a(i, p) * a(q, j) + a(i, q) * a(p, j));
    a = detail::drop_indices(next, {p, q});
    detail::remove_content(a);
  }
  return out;
}

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk, d1 | d2 | ... and
/// every di >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion);

  /// Cokernel of an integer matrix, read off its Smith diagonal.
  static AbelianGroup cokernel(const IntMatrix& m);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  /// "0", "Z", "Z^2 + Z/3", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Hirzebruch-Jung expansion p/q = a1 - 1/(a2 - 1/(... - 1/ak)), all ai >= 2.
/// Requires 0 < q < p and gcd(p, q) = 1.
std::vector<Integer> hj_continued_fraction(const Integer& p, const Integer& q);

/// Evaluates a Hirzebruch-Jung fraction to a reduced p/q with q > 0 (or p = 0,
/// q = 1). Throws DivisionByZero when some proper tail evaluates to zero.
std::pair<Integer, Integer> evaluate_hj(const std::vector<Integer>& coeffs);

}  // namespace kirby
