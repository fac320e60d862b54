#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "latpoly/integer.hpp"
#include "oracles.hpp"

using namespace latpoly;

TEST(Checked, OverflowThrows) {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(checked::add(big, 1), Error);
  EXPECT_THROW(checked::sub(-big - 1, 1), Error);
  EXPECT_THROW(checked::mul(big / 2 + 1, 2), Error);
  EXPECT_EQ(checked::mul(-3, 7), -21);
  EXPECT_THROW(checked::narrow(Integer(big) + 1), Error);
  EXPECT_EQ(checked::narrow(Integer(-5)), -5);
}

TEST(Checked, FloorAndCeilDivision) {
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b : {1, 2, 3, 7}) {
      EXPECT_EQ(ceil_div(a, b), oracle::ceil_div(a, b)) << a << "/" << b;
      EXPECT_EQ(floor_div(a, b), -oracle::ceil_div(-a, b)) << a << "/" << b;
      EXPECT_EQ(floor_div(Integer(a), Integer(b)), Integer(floor_div(a, b)));
      EXPECT_EQ(floor_of(Rational(a, b)), Integer(floor_div(a, b)));
      EXPECT_EQ(ceil_of(Rational(a, b)), Integer(ceil_div(a, b)));
    }
}

TEST(ExtendedGcd, BezoutIdentity) {
  for (int a = -30; a <= 30; a += 7)
    for (int b = -25; b <= 25; b += 4) {
      Integer x, y;
      const Integer g = extended_gcd(a, b, x, y);
      EXPECT_EQ(g, Integer(std::gcd(a, b)));
      EXPECT_EQ(Integer(a) * x + Integer(b) * y, g);
    }
}

TEST(Determinant, AgreesWithRationalElimination) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix m(n, IntRow(n));
    oracle::RMatrix r(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = static_cast<std::int64_t>(rng() % 21) - 10;
        r[i][j] = m[i][j];
      }
    EXPECT_EQ(Rational(determinant(m)), oracle::det(r));
  }
}

TEST(Determinant, LargeEntriesUseWideArithmetic) {
  const std::int64_t e = std::int64_t(1) << 40;
  IntMatrix m{{e, 1, 0}, {0, e, 1}, {1, 0, e}};
  EXPECT_EQ(determinant(m), Integer(e) * e * e + 1);
}

TEST(Rank, DetectsDependentRows) {
  EXPECT_EQ(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}), 2u);
  EXPECT_EQ(rank(IntMatrix{{0, 0}, {0, 0}}), 0u);
}

TEST(Combinatorics, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(binomial(9, 3), 84);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(25), Integer("15511210043330985984000000"));
}
