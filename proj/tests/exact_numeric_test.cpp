#include <gtest/gtest.h>

#include "omega/errors.hpp"
#include "omega/exact_numeric.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace omega {
namespace {

using testing::Gen;

Rational q(long n, long d = 1) { return {Integer(n), Integer(d)}; }

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("3/6"), q(1, 2));
  EXPECT_EQ(Rational::parse("-5/128"), q(-5, 128));
  EXPECT_EQ(Rational::parse("0.125"), q(1, 8));
  EXPECT_EQ(Rational::parse("-2.5"), q(-5, 2));
  EXPECT_EQ(Rational::parse("7"), q(7));
  EXPECT_THROW(Rational::parse("1/0"), MathError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational::parse("."), ParseError);
}

TEST(Rational, Rendering) {
  EXPECT_EQ(q(4, 2).to_string(), "2");
  EXPECT_EQ(q(-1, 3).to_string(), "-1/3");
  EXPECT_EQ(q(2).to_fraction_string(), "2/1");
  EXPECT_EQ(q(0).to_fraction_string(), "0/1");
}

TEST(Rational, FloorRoundsTowardMinusInfinity) {
  EXPECT_EQ(q(7, 2).floor(), Integer(3));
  EXPECT_EQ(q(-7, 2).floor(), Integer(-4));
  EXPECT_EQ(q(-3).floor(), Integer(-3));
}

TEST(Rational, DivisionByZero) {
  Rational x = q(1);
  EXPECT_THROW(x /= Rational(0), MathError);
  EXPECT_THROW(Rational(0).inverse(), MathError);
}

TEST(ExactPower, RationalRootsOnly) {
  EXPECT_EQ(exact_power(q(9, 4), q(1, 2)), q(3, 2));
  EXPECT_EQ(exact_power(q(8), q(-2, 3)), q(1, 4));
  EXPECT_EQ(exact_power(q(-8), q(1, 3)), q(-2));
  EXPECT_FALSE(exact_power(q(2), q(1, 2)).has_value());
  EXPECT_FALSE(exact_power(q(-4), q(1, 2)).has_value());
}

TEST(Combinatorics, SmallValues) {
  EXPECT_EQ(factorial(0), Integer(1));
  EXPECT_EQ(factorial(10), Integer(3628800));
  EXPECT_EQ(binomial(5, 2), Integer(10));
  EXPECT_EQ(binomial(3, 5), Integer(0));
  EXPECT_EQ(binomial_general(q(1, 2), 2), q(-1, 8));
  EXPECT_EQ(falling_factorial(q(3), 4), q(0));
  EXPECT_EQ(bernoulli(0), q(1));
  EXPECT_EQ(bernoulli(1), q(-1, 2));
  EXPECT_EQ(bernoulli(2), q(1, 6));
  EXPECT_EQ(bernoulli(3), q(0));
  EXPECT_EQ(bernoulli(12), q(-691, 2730));
}

TEST(Combinatorics, XCoefficients) {
  EXPECT_EQ(x_coeff(0, 0), Integer(1));
  EXPECT_EQ(x_coeff(1, 0), Integer(0));
  EXPECT_EQ(x_coeff(2, 4), Integer(14));
  EXPECT_EQ(x_coeff(3, 4), Integer(36));
  EXPECT_EQ(x_coeff(4, 2), Integer(0));
}

TEST(Combinatorics, KCoefficients) {
  EXPECT_EQ(k_coeff(0, 0), Integer(1));
  EXPECT_EQ(k_coeff(3, 1), Integer(6));
  EXPECT_EQ(k_coeff(3, 2), Integer(11));
  EXPECT_EQ(k_coeff(3, 3), Integer(6));
  EXPECT_THROW(k_coeff(2, 3), MathError);
}

// X_p^n counts surjections from n onto p.
TEST(CombinatoricsOracle, XMatchesPartitionEnumeration) {
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t p = 0; p <= 9; ++p) {
      EXPECT_EQ(x_coeff(p, n), factorial(p) * Integer(testing::stirling2_enumerate(n, p))) << p << "," << n;
    }
  }
}

TEST(CombinatoricsOracle, XMatchesStirlingTableTo12) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t p = 0; p <= 12; ++p) {
      EXPECT_EQ(x_coeff(p, n), factorial(p) * testing::stirling2_table(n, p));
      EXPECT_EQ(stirling2(n, p), testing::stirling2_table(n, p));
    }
  }
}

TEST(CombinatoricsOracle, KMatchesSubsetEnumeration) {
  for (std::size_t m = 0; m <= 12; ++m) {
    for (std::size_t j = 0; j <= m; ++j) EXPECT_EQ(k_coeff(m, j), testing::subset_product_sum(m, j)) << m << "," << j;
  }
}

TEST(CombinatoricsOracle, KMatchesCycleCounts) {
  for (std::size_t p = 1; p <= 8; ++p) {
    for (std::size_t n = 1; n <= p; ++n) {
      EXPECT_EQ(k_coeff(p - 1, p - n), Integer(testing::stirling1_enumerate(p, n))) << p << "," << n;
    }
  }
  for (std::size_t p = 1; p <= 12; ++p) {
    for (std::size_t n = 1; n <= p; ++n) {
      EXPECT_EQ(stirling1_unsigned(p, n), testing::stirling1_table(p, n));
    }
  }
}

TEST(CombinatoricsOracle, BernoulliRecurrence) {
  // sum_{k<m+1} C(m+1, k) B_k = 0 for m >= 1
  for (std::size_t m = 1; m <= 20; ++m) {
    Rational s;
    for (std::size_t k = 0; k <= m; ++k) s += Rational(binomial(m + 1, k)) * bernoulli(k);
    EXPECT_TRUE(s.is_zero()) << m;
  }
}

TEST(CombinatoricsProperty, PascalForGeneralBinomials) {
  Gen gen(11);
  for (int i = 0; i < 100; ++i) {
    Rational alpha = gen.rational(20, 7);
    auto k = static_cast<std::size_t>(gen.integer(1, 10));
    EXPECT_EQ(binomial_general(alpha + Rational(1), k), binomial_general(alpha, k) + binomial_general(alpha, k - 1));
  }
}

TEST(RationalProperty, FieldLaws) {
  Gen gen(12);
  for (int i = 0; i < 300; ++i) {
    Rational a = gen.rational(50, 30), b = gen.rational(50, 30), c = gen.nonzero_rational(50, 30);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a / c * c, a);
    EXPECT_EQ(Rational::parse(a.to_fraction_string()), a);
    EXPECT_LE(Rational(a.floor()), a);
    EXPECT_GT(Rational(a.floor()) + Rational(1), a);
  }
}

}  // namespace
}  // namespace omega
