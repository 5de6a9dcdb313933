#pragma once

#include "hgm/exact.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

namespace hgm {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<std::int64_t>;
using BigMatrix = DenseMatrix<BigInt>;

/// Fraction-free Gaussian elimination; every division is exact.
template <typename Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = Scalar((a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous);
      }
    }
    previous = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

/// Bareiss on 64-bit entries with 128-bit intermediates; nullopt if any entry leaves int64.
inline std::optional<std::int64_t> bareiss_determinant_int64(IntMatrix a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  std::int64_t sign = 1;
  __int128 previous = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    const __int128 diagonal = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const __int128 lead = a(i, k);
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const __int128 value = (static_cast<__int128>(a(i, j)) * diagonal - lead * a(k, j)) / previous;
        if (value < lo || value > hi) return std::nullopt;
        a(i, j) = static_cast<std::int64_t>(value);
      }
    }
    previous = diagonal;
  }
  return sign * a(n - 1, n - 1);
}

/// Exact determinant of an integer matrix: int64 fast path, big-integer fallback.
inline BigInt exact_determinant(const IntMatrix& a) {
  if (auto fast = bareiss_determinant_int64(a)) return BigInt(*fast);
  return bareiss_determinant<BigInt>(a.cast<BigInt>());
}

/// Product of big-integer matrices by explicit loops (expression templates of
/// the multiprecision bridge do not compose with Eigen products here).
inline BigMatrix big_product(const BigMatrix& a, const BigMatrix& b) {
  BigMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt sum = 0;
      for (Eigen::Index t = 0; t < a.cols(); ++t) sum += a(i, t) * b(t, j);
      out(i, j) = sum;
    }
  }
  return out;
}

/// trace(A^d) with exact integer entries.
inline BigInt trace_of_power(const IntMatrix& a, int d) {
  BigMatrix base = a.cast<BigInt>();
  BigMatrix result = BigMatrix::Identity(a.rows(), a.cols());
  for (unsigned e = static_cast<unsigned>(d); e > 0; e >>= 1) {
    if (e & 1U) result = big_product(result, base);
    if (e > 1) base = big_product(base, base);
  }
  BigInt trace = 0;
  for (Eigen::Index i = 0; i < result.rows(); ++i) trace += result(i, i);
  return trace;
}

}  // namespace hgm
