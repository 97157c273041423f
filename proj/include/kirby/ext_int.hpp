#pragma once

#include <kirby/integer.hpp>

#include <optional>
#include <string>

namespace kirby {

/// An integer, or Unknown. Used for framings and linking numbers that the
/// source diagrams determine but that the engine refuses to guess.
///
/// Arithmetic involving Unknown yields Unknown. There is deliberately no
/// operator==: comparison against Unknown is indeterminate, so callers pick
/// either certainly_equal() (value comparison, false on Unknown) or
/// identical() (structural comparison, Unknown matches Unknown).
class ExtInt {
 public:
  ExtInt() = default;
  ExtInt(const Integer& v) : value_(v) {}  // NOLINT(implicit)
  ExtInt(int v) : value_(Integer(v)) {}    // NOLINT(implicit)
  ExtInt(long v) : value_(Integer(v)) {}   // NOLINT(implicit)
  ExtInt(long long v) : value_(Integer(v)) {}  // NOLINT(implicit)

  static ExtInt unknown() { return ExtInt(); }

  bool known() const { return value_.has_value(); }
  bool is_unknown() const { return !value_.has_value(); }
  /// Precondition: known().
  const Integer& value() const { return *value_; }
  const std::optional<Integer>& get() const { return value_; }

  /// Known and equal to v.
  bool is(const Integer& v) const { return value_ && *value_ == v; }
  bool is_zero() const { return is(Integer(0)); }

  std::string to_string() const { return value_ ? value_->str() : "?"; }

  ExtInt& operator+=(const ExtInt& o);
  ExtInt& operator-=(const ExtInt& o);
  ExtInt& operator*=(const ExtInt& o);

  friend ExtInt operator+(ExtInt a, const ExtInt& b) { return a += b; }
  friend ExtInt operator-(ExtInt a, const ExtInt& b) { return a -= b; }
  friend ExtInt operator*(ExtInt a, const ExtInt& b) { return a *= b; }
  friend ExtInt operator-(const ExtInt& a) {
    return a.known() ? ExtInt(Integer(-a.value())) : ExtInt();
  }

 private:
  std::optional<Integer> value_;
};

inline bool certainly_equal(const ExtInt& a, const ExtInt& b) {
  return a.known() && b.known() && a.value() == b.value();
}

inline bool identical(const ExtInt& a, const ExtInt& b) {
  return a.get() == b.get();
}

using ExtMatrix = DenseMatrix<ExtInt>;

bool identical(const ExtMatrix& a, const ExtMatrix& b);
bool all_known(const ExtMatrix& m);
/// Precondition: all_known(m).
IntMatrix to_int_matrix(const ExtMatrix& m);
ExtMatrix to_ext_matrix(const IntMatrix& m);

}  // namespace kirby

namespace Eigen {

template <>
struct NumTraits<kirby::ExtInt> : GenericNumTraits<kirby::ExtInt> {
  using Real = kirby::ExtInt;
  using NonInteger = kirby::ExtInt;
  using Nested = kirby::ExtInt;
  using Literal = kirby::ExtInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
