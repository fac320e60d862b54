#pragma once

// Exact scalar arithmetic: checked int64 coordinates, arbitrary-precision
// determinants and rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/error.hpp"

namespace latpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntRow = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntRow>;
using BigRow = std::vector<Integer>;
using BigMatrix = std::vector<BigRow>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 multiplication");
  return r;
}

inline std::int64_t narrow(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    fail(ErrorCode::Overflow, "value does not fit in int64: " + v.str());
  return static_cast<std::int64_t>(v);
}

}  // namespace checked

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_of(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Integer ceil_of(const Rational& r) { return -floor_of(-r); }

inline int sign_of(const Integer& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }
inline int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

inline Integer to_integer(const Rational& r) {
  require(boost::multiprecision::denominator(r) == 1, ErrorCode::InvariantViolation,
          "rational is not integral: " + r.str());
  return boost::multiprecision::numerator(r);
}

/// Extended gcd: returns g >= 0 and x, y with a*x + b*y = g.
inline Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

namespace detail {

// Fraction-free Gaussian elimination; returns the determinant.
template <typename T>
T bareiss_det(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T sign = 1;
  T prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return T(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline bool hadamard_fits(const IntMatrix& m, long double limit) {
  long double bound = 1.0L;
  for (const auto& row : m) {
    long double norm2 = 0.0L;
    for (auto v : row) norm2 += static_cast<long double>(v) * static_cast<long double>(v);
    bound *= std::sqrt(norm2) + 1.0L;
    if (bound > limit) return false;
  }
  return true;
}

}  // namespace detail

/// Exact determinant of a square int64 matrix.
///
/// Every Bareiss intermediate is a minor of the input, so when the Hadamard
/// bound is below 2^60 the computation runs in __int128 (products of two
/// minors stay below 2^120); otherwise it runs in cpp_int.
inline Integer determinant(const IntMatrix& m) {
  for (const auto& row : m) require(row.size() == m.size(), ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  if (detail::hadamard_fits(m, 1.0e18L)) {
    std::vector<std::vector<__int128>> w(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) w[i].assign(m[i].begin(), m[i].end());
    return Integer(static_cast<long long>(detail::bareiss_det(std::move(w))));
  }
  BigMatrix w(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) w[i].emplace_back(v);
  return detail::bareiss_det(std::move(w));
}

inline Integer determinant(const BigMatrix& m) { return detail::bareiss_det(m); }

inline Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

/// Rank of a (not necessarily square) rational matrix.
inline std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const IntMatrix& m) {
  RationalMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) q[i].emplace_back(v);
  return rank(std::move(q));
}

/// Solves the square system A x = b exactly; A must be nonsingular.
inline RationalVector solve(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    require(pivot < n, ErrorCode::DegenerateSimplex, "singular linear system");
    std::swap(a[pivot], a[k]);
    std::swap(b[pivot], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace latpoly
