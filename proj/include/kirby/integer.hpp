#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace kirby {

/// Arbitrary-precision integer used for every framing, linking number and
/// matrix entry in the engine.
using Integer = boost::multiprecision::mpz_int;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<Integer>;

inline std::string to_string(const Integer& v) { return v.str(); }

inline int sign(const Integer& v) { return v.sign(); }

inline Integer abs(const Integer& v) { return boost::multiprecision::abs(v); }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace kirby
