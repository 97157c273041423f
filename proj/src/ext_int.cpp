#include <kirby/ext_int.hpp>

namespace kirby {

ExtInt& ExtInt::operator+=(const ExtInt& o) {
  if (known() && o.known())
    *value_ += *o.value_;
  else
    value_.reset();
  return *this;
}

ExtInt& ExtInt::operator-=(const ExtInt& o) {
  if (known() && o.known())
    *value_ -= *o.value_;
  else
    value_.reset();
  return *this;
}

ExtInt& ExtInt::operator*=(const ExtInt& o) {
  if (known() && o.known())
    *value_ *= *o.value_;
  else
    value_.reset();
  return *this;
}

bool identical(const ExtMatrix& a, const ExtMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!identical(a(i, j), b(i, j))) return false;
  return true;
}

bool all_known(const ExtMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j).is_unknown()) return false;
  return true;
}

IntMatrix to_int_matrix(const ExtMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).value();
  return out;
}

ExtMatrix to_ext_matrix(const IntMatrix& m) {
  ExtMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = ExtInt(m(i, j));
  return out;
}

}  // namespace kirby
