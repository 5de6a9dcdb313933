#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hgm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(long base, long exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

/// base^exponent as a rational; negative exponents give the reciprocal.
inline Rational rational_pow(long base, long exponent) {
  if (exponent >= 0) return Rational(big_pow(base, exponent));
  return Rational(BigInt(1), big_pow(base, -exponent));
}

inline BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace hgm
