#include <gtest/gtest.h>

#include "omega/errors.hpp"
#include "omega/lift_calculus.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace omega {
namespace {

using testing::Gen;

Rational q(long n, long d = 1) { return {Integer(n), Integer(d)}; }
OmegaNumber c(const Rational& v) { return OmegaNumber::constant(v); }
OmegaNumber o(Exponent n = 1) { return OmegaNumber::o(n); }

std::vector<Rational> monomial(std::size_t degree) {
  std::vector<Rational> p(degree + 1);
  p[degree] = q(1);
  return p;
}

// D^p f(x) by the recursive definition, with exact substitution.
OmegaNumber iterated_difference(const std::vector<Rational>& f, const OmegaNumber& x, std::size_t p) {
  if (p == 0) return testing::substitute(f, x);
  return iterated_difference(f, x + o(), p - 1) - iterated_difference(f, x, p - 1);
}

std::vector<Rational> poly_derivative(std::vector<Rational> p) {
  if (p.size() <= 1) return {q(0)};
  std::vector<Rational> d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(static_cast<long>(i));
  return d;
}

TEST(LiftEval, Polynomial) {
  auto f = LiftedFunction::polynomial(monomial(2));
  EXPECT_EQ(lift_eval(f, c(q(1)) + o()), c(q(1)) + OmegaNumber::constant(q(2)) * o() + o(2));
  EXPECT_TRUE(lift_eval(f, c(q(1)) + o()).is_exact());
}

TEST(LiftEval, SquareRoot) {
  OmegaNumber r = lift_eval(LiftedFunction::power(q(1, 2)), c(q(1)) + o(), 4);
  EXPECT_EQ(truncate(r, 4), c(q(1)) + c(q(1, 2)) * o() - c(q(1, 8)) * o(2) + c(q(1, 16)) * o(3) -
                                c(q(5, 128)) * o(4));
}

TEST(LiftEval, Reciprocal) {
  OmegaNumber expect = c(q(1)) - o() + o(2) - o(3);
  EXPECT_EQ(truncate(lift_eval(LiftedFunction::power(q(-1)), c(q(1)) + o(), 3), 3), expect);
  EXPECT_EQ(truncate(lift_eval(LiftedFunction::rational({q(1)}, {q(0), q(1)}), c(q(1)) + o(), 3), 3), expect);
}

TEST(LiftEval, Errors) {
  EXPECT_THROW(lift_eval(LiftedFunction::power(q(1, 2)), c(q(-1)) + o()), MathError);
  EXPECT_THROW(lift_eval(LiftedFunction::power(q(-1)), o()), MathError);
  EXPECT_THROW(lift_eval(LiftedFunction::polynomial(monomial(2)), OmegaNumber::sigma()), MathError);
  // sqrt(2) is irrational: exact mode refuses, decimal mode rounds
  EXPECT_THROW(lift_eval(LiftedFunction::power(q(1, 2)), c(q(2)) + o(), 2), MathError);
  OmegaNumber r = lift_eval(LiftedFunction::power(q(1, 2), 30), c(q(2)) + o(), 2);
  Rational s = r.coeff(0);
  EXPECT_LT((s * s - q(2)).abs(), Rational(Integer(1), Integer::parse("1000000000000000000000000000")));
  EXPECT_THROW(lift_eval(LiftedFunction::log(), c(q(0)) + o()), MathError);
}

TEST(LiftEval, Transcendental) {
  OmegaNumber e = lift_eval(LiftedFunction::exp(), o(), 5);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(e.coeff(-static_cast<Exponent>(k)), Rational(Integer(1), factorial(k)));
  OmegaNumber s = lift_eval(LiftedFunction::sin(), o(), 4);
  EXPECT_EQ(s.coeff(0), q(0));
  EXPECT_EQ(s.coeff(-1), q(1));
  EXPECT_EQ(s.coeff(-3), q(-1, 6));
  OmegaNumber cs = lift_eval(LiftedFunction::cos(), o(), 4);
  EXPECT_EQ(cs.coeff(-2), q(-1, 2));
  OmegaNumber l = lift_eval(LiftedFunction::log(), c(q(1)) + o(), 4);
  EXPECT_EQ(l.coeff(0), q(0));
  EXPECT_EQ(l.coeff(-2), q(-1, 2));
  EXPECT_EQ(l.coeff(-3), q(1, 3));
  EXPECT_EQ(LiftedFunction::exp().mode(), EvalMode::kDecimal);
}

TEST(Derivative, Values) {
  auto f = LiftedFunction::polynomial(monomial(3));
  EXPECT_EQ(derivative(f, 1)(q(2)), q(12));
  EXPECT_EQ(derivative(f, 4)(q(2)), q(0));
  EXPECT_EQ(derivative(f, 1).polynomial_degree(), 2U);
}

TEST(Difference, Examples) {
  auto sq = LiftedFunction::polynomial(monomial(2));
  Rational t = q(3, 2);
  EXPECT_EQ(difference(sq, c(t), 1), c(q(2) * t) * o() + o(2));
  auto cube = LiftedFunction::polynomial(monomial(3));
  EXPECT_EQ(difference(cube, OmegaNumber{}, 3), c(q(6)) * o(3));
  EXPECT_TRUE(difference(sq, c(t) + o(2), 3).is_zero());
  EXPECT_THROW(difference(sq, c(t), 0), MathError);
}

TEST(Differential, Examples) {
  auto sq = LiftedFunction::polynomial(monomial(2));
  Rational t = q(5, 3);
  EXPECT_EQ(differential(sq, c(t), 1), c(q(2) * t) * o());
  EXPECT_EQ(differential(LiftedFunction::polynomial(monomial(3)), c(q(1)), 3), c(q(6)) * o(3));
  EXPECT_EQ(differential(sq, c(t) + o(), 0), lift_eval(sq, c(t) + o()));
}

TEST(CoeffTables, PrintedRows) {
  CoeffTable up = d_to_D_table(4);
  EXPECT_EQ(up.row_from_diagonal(1), (std::vector<Rational>{q(1), q(1, 2), q(1, 6), q(1, 24)}));
  EXPECT_EQ(up.row_from_diagonal(2), (std::vector<Rational>{q(1), q(1), q(7, 12)}));
  EXPECT_EQ(up.row_from_diagonal(3), (std::vector<Rational>{q(1), q(3, 2)}));
  CoeffTable down = D_to_d_table(4);
  EXPECT_EQ(down.row_from_diagonal(1), (std::vector<Rational>{q(1), q(-1, 2), q(1, 3), q(-1, 4)}));
  EXPECT_EQ(down.row_from_diagonal(2), (std::vector<Rational>{q(1), q(-1), q(11, 12)}));
  EXPECT_EQ(down.row_from_diagonal(3), (std::vector<Rational>{q(1), q(-3, 2)}));
  EXPECT_EQ(d_to_D_table(1).at(1, 1), q(1));
  EXPECT_THROW(d_to_D_table(0), MathError);
  EXPECT_EQ(parse_direction("D_to_d"), TableDirection::kCapitalDToD);
  EXPECT_THROW(parse_direction("up"), MathError);
}

TEST(CoeffTablesOracle, EntriesFromStirlingNumbers) {
  const std::size_t m = 10;
  CoeffTable up = d_to_D_table(m), down = D_to_d_table(m);
  for (std::size_t a = 1; a <= m; ++a) {
    for (std::size_t b = 1; b <= m; ++b) {
      Rational u = b < a ? q(0) : Rational(testing::fact(a) * testing::stirling2_table(b, a), testing::fact(b));
      EXPECT_EQ(up.at(a, b), u) << a << "," << b;
      Rational d = b < a ? q(0) : Rational(testing::fact(a) * testing::stirling1_table(b, a), testing::fact(b));
      if ((b - a) % 2 == 1) d = -d;
      EXPECT_EQ(down.at(a, b), d) << a << "," << b;
    }
  }
}

TEST(CoeffTablesProperty, MutuallyInverse) {
  const std::size_t m = 8;
  CoeffTable up = d_to_D_table(m), down = D_to_d_table(m);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      Rational s1, s2;
      for (std::size_t k = 1; k <= m; ++k) {
        s1 += down.at(i, k) * up.at(k, j);
        s2 += up.at(i, k) * down.at(k, j);
      }
      EXPECT_EQ(s1, i == j ? q(1) : q(0));
      EXPECT_EQ(s2, i == j ? q(1) : q(0));
    }
  }
}

TEST(LiftProperty, DifferenceMatchesDefinition) {
  Gen gen(31);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> f = gen.polynomial(6);
    OmegaNumber x = c(gen.rational()) + (gen.coin() ? gen.infinitesimal() : OmegaNumber{});
    auto p = static_cast<std::size_t>(gen.integer(1, 5));
    EXPECT_EQ(difference(LiftedFunction::polynomial(f), x, p), iterated_difference(f, x, p));
  }
}

TEST(LiftProperty, DifferenceExpandsIntoDifferentials) {
  Gen gen(32);
  CoeffTable up = d_to_D_table(8);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> f = gen.polynomial(6);
    auto lf = LiftedFunction::polynomial(f);
    OmegaNumber t = c(gen.rational());
    auto p = static_cast<std::size_t>(gen.integer(1, 6));
    OmegaNumber sum;
    for (std::size_t n = p; n <= 7; ++n) sum = sum + scale(differential(lf, t, n), up.at(p, n));
    EXPECT_EQ(difference(lf, t, p), sum);
  }
}

TEST(LiftProperty, DifferentialsFromDifferences) {
  Gen gen(33);
  CoeffTable down = D_to_d_table(8);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> f = gen.polynomial(6);
    auto lf = LiftedFunction::polynomial(f);
    OmegaNumber t = c(gen.rational());
    auto n = static_cast<std::size_t>(gen.integer(1, 6));
    OmegaNumber sum;
    for (std::size_t p = n; p <= 7; ++p) sum = sum + scale(difference(lf, t, p), down.at(n, p));
    EXPECT_EQ(differential(lf, t, n), sum);
  }
}

TEST(LiftProperty, DifferenceVanishesAboveDegree) {
  Gen gen(34);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> f = gen.polynomial(5);
    OmegaNumber x = c(gen.rational()) + gen.infinitesimal();
    auto p = f.size() + static_cast<std::size_t>(gen.integer(0, 2));
    EXPECT_TRUE(difference(LiftedFunction::polynomial(f), x, p).is_zero());
  }
}

TEST(LiftProperty, LiftOfPolynomialIsSubstitution) {
  Gen gen(35);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> f = gen.polynomial(6);
    OmegaNumber x = c(gen.rational()) + gen.infinitesimal();
    EXPECT_EQ(lift_eval(LiftedFunction::polynomial(f), x), testing::substitute(f, x));
  }
}

// The truncated (non-exact) path agrees with the substitution oracle above
// its floor.
TEST(LiftProperty, TruncatedArgumentAgreesAboveFloor) {
  Gen gen(36);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> f = gen.polynomial(6);
    OmegaNumber u = gen.infinitesimal();
    OmegaNumber x = c(gen.rational()) + u;
    std::vector<Term> terms = x.terms();
    OmegaNumber truncated = OmegaNumber::make(terms, -10);
    OmegaNumber lifted = lift_eval(LiftedFunction::polynomial(f), truncated, 16);
    ASSERT_EQ(lifted.floor(), std::optional<Exponent>(-10));
    EXPECT_EQ(truncate(lifted, 10), truncate(testing::substitute(f, x), 10));
  }
}

TEST(LiftProperty, TaylorShift) {
  Gen gen(37);
  const std::size_t depth = 8;
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> f = gen.polynomial(6);
    auto lf = LiftedFunction::polynomial(f);
    OmegaNumber x = c(gen.rational()) + gen.infinitesimal();
    OmegaNumber v = gen.infinitesimal();
    OmegaNumber sum;
    OmegaNumber vq = OmegaNumber::constant(q(1));
    for (std::size_t k = 0; k <= depth; ++k) {
      sum = sum + scale(lift_eval(lf.derivative(k), x, depth) * vq, Rational(Integer(1), factorial(k)));
      vq = vq * v;
    }
    EXPECT_EQ(truncate(lift_eval(lf, x + v, depth), depth), truncate(sum, depth));
  }
}

TEST(NsDiff, Examples) {
  EXPECT_TRUE(ns_diff_check(LiftedFunction::polynomial(monomial(2)), q(3), o()));
  EXPECT_TRUE(ns_diff_check(LiftedFunction::polynomial(monomial(3)), q(-2), o(2)));
  EXPECT_TRUE(ns_diff_check(LiftedFunction::polynomial({q(1), q(4)}), q(7), c(q(3)) * o() + o(2)));
  EXPECT_TRUE(ns_diff_check(LiftedFunction::exp(), q(0), o()));
  EXPECT_THROW(ns_diff_check(LiftedFunction::polynomial(monomial(2)), q(3), c(q(1))), MathError);
  EXPECT_THROW(ns_diff_check(LiftedFunction::polynomial(monomial(2)), q(3), OmegaNumber{}), MathError);
}

TEST(NsDiffProperty, RemainderOrderAtLeastTwiceIncrement) {
  Gen gen(38);
  const std::vector<OmegaNumber> hs{o(), o(2), c(q(3)) * o() + o(2)};
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> f = gen.polynomial(6);
    Rational t = gen.rational();
    for (const OmegaNumber& h : hs) {
      EXPECT_TRUE(ns_diff_check(LiftedFunction::polynomial(f), t, h));
      OmegaNumber rem = testing::substitute(f, c(t) + h) - testing::substitute(f, c(t)) -
                        testing::substitute(poly_derivative(f), c(t)) * h;
      if (!rem.is_zero()) EXPECT_GE(ord_o(rem), 2 * ord_o(h));
    }
  }
}

}  // namespace
}  // namespace omega
