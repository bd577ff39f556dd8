#include <gtest/gtest.h>

#include "omega/aleph.hpp"
#include "omega/errors.hpp"
#include "support/generators.hpp"

namespace omega {
namespace {

using testing::Gen;

Rational q(long n, long d = 1) { return {Integer(n), Integer(d)}; }
R1Point pt(const Rational& t, long k) { return {t, Integer(k)}; }
AlephNumber aleph(std::vector<Rational> c) { return AlephNumber(std::move(c)); }
const AlephNumber kSigma = AlephNumber::sigma();

TEST(AlephNumber, Membership) {
  EXPECT_NO_THROW(aleph({q(-1), q(1)}));
  EXPECT_NO_THROW(aleph({q(3), q(-2), q(1, 2)}));
  EXPECT_THROW(aleph({q(-1)}), MathError);
  EXPECT_THROW(aleph({q(1, 2), q(1)}), MathError);
  EXPECT_THROW(aleph({q(1), q(-1)}), MathError);
  EXPECT_EQ(aleph({q(4), q(0), q(0)}), AlephNumber(4));
  EXPECT_TRUE(AlephNumber(4).is_standard());
  EXPECT_FALSE(kSigma.is_standard());
}

TEST(Counting, Intervals) {
  EXPECT_EQ(count_interval(R1Interval(pt(q(0), 1), pt(q(0), 5))), AlephNumber(5));
  EXPECT_EQ(count_interval(R1Interval(pt(q(0), 1), pt(q(1), 0))), kSigma);
  R1Point x = pt(q(3, 2), -4);
  EXPECT_EQ(count_interval(R1Interval(x, x)), AlephNumber(1));
  EXPECT_EQ(count_interval(R1Interval(pt(q(0), 0), pt(q(1), 0), Inclusivity::kRightOpen)), kSigma);
  EXPECT_THROW(count_interval(R1Interval(x, x, Inclusivity::kRightOpen)), MathError);
  EXPECT_THROW(R1Interval(pt(q(1), 0), pt(q(0), 5)), MathError);
}

TEST(Counting, PhiPsi) {
  EXPECT_EQ(phi(pt(q(2), 3)), aleph({q(3), q(2)}));
  EXPECT_EQ(phi(pt(q(0), 5)), AlephNumber(5));
  EXPECT_EQ(psi(aleph({q(-7), q(1, 3)})), pt(q(1, 3), -7));
  EXPECT_THROW(phi(pt(q(0), -1)), MathError);
  EXPECT_THROW(phi(pt(q(-1), 100)), MathError);
  EXPECT_THROW(psi(otimes(kSigma, kSigma)), MathError);
}

// With S replaced by a concrete M, the points j/M of a step-1/M progression
// in ]0, t + k/M] number t M + k.
TEST(CountingOracle, PhiMatchesFiniteProgression) {
  Gen gen(41);
  const long m = 5040;
  for (int i = 0; i < 100; ++i) {
    R1Point x = gen.lattice_point();
    Rational bound = x.t + Rational(x.k, Integer(m));
    long count = 0;
    for (long j = 1; Rational(Integer(j), Integer(m)) <= bound; ++j) ++count;
    AlephNumber l = phi(x);
    Rational at_m = l.coeff(0) + (l.degree() >= 1 ? l.coeff(1) * Rational(m) : q(0));
    EXPECT_EQ(at_m, Rational(count)) << to_string(x);
  }
}

TEST(Peano, SuccessorPredecessor) {
  EXPECT_EQ(successor(AlephNumber(0)), AlephNumber(1));
  EXPECT_EQ(successor(kSigma), aleph({q(1), q(1)}));
  EXPECT_EQ(predecessor(kSigma), aleph({q(-1), q(1)}));
  EXPECT_THROW(predecessor(AlephNumber(0)), MathError);
}

TEST(Arithmetic, ClosedForms) {
  EXPECT_EQ(oplus(kSigma, kSigma), aleph({q(0), q(2)}));
  EXPECT_EQ(otimes(kSigma, kSigma), aleph({q(0), q(0), q(1)}));
  EXPECT_EQ(otimes(aleph({q(1), q(1, 2)}), AlephNumber(2)), aleph({q(2), q(1)}));
  EXPECT_EQ(otimes(kSigma, AlephNumber(0)), AlephNumber(0));
}

TEST(Arithmetic, Inductive) {
  AlephNumber l = aleph({q(-3), q(2, 7)});
  EXPECT_EQ(oplus_inductive(l, 0), l);
  EXPECT_EQ(otimes_inductive(l, 1), l);
  EXPECT_EQ(otimes_inductive(l, 0), AlephNumber(0));
  EXPECT_EQ(otimes_inductive(aleph({q(1), q(1)}), 3), aleph({q(3), q(3)}));
}

TEST(Order, Examples) {
  AlephNumber big(std::vector<Rational>{Rational(Integer::parse("1" + std::string(100, '0')))});
  EXPECT_EQ(compare_aleph(kSigma, big), std::strong_ordering::greater);
  EXPECT_EQ(compare_aleph(successor(kSigma), kSigma), std::strong_ordering::greater);
  EXPECT_EQ(compare_aleph(kSigma, kSigma), std::strong_ordering::equal);
  EXPECT_EQ(compare_aleph(aleph({q(-1000), q(1, 1000)}), AlephNumber(1000000)), std::strong_ordering::greater);
}

TEST(Embedding, Examples) {
  EXPECT_EQ(embed(successor(kSigma)), OmegaNumber::sigma() + OmegaNumber::constant(q(1)));
  EXPECT_EQ(embed(kSigma) * OmegaNumber::o(), OmegaNumber::constant(q(1)));
  EXPECT_EQ(to_string(aleph({q(3), q(2)})), "2*S + 3");
}

TEST(IntegerTruncation, Examples) {
  OmegaNumber s = OmegaNumber::sigma();
  auto c = [](const Rational& v) { return OmegaNumber::constant(v); };
  OmegaNumber x = scale(s, q(3)) + c(q(5, 2)) + OmegaNumber::o();
  AlephNumber l = integer_truncation(x);
  EXPECT_EQ(l, aleph({q(2), q(3)}));
  EXPECT_TRUE(compare(embed(l), x) <= 0);
  EXPECT_TRUE(compare(embed(successor(l)), x) > 0);
  EXPECT_EQ(integer_truncation(c(q(7, 2))), AlephNumber(3));
  EXPECT_EQ(integer_truncation(s), kSigma);
  EXPECT_EQ(integer_truncation(c(q(3)) - OmegaNumber::o()), AlephNumber(2));
  EXPECT_EQ(integer_truncation(c(q(-7, 2))), AlephNumber(3));
  EXPECT_EQ(integer_truncation(OmegaNumber::o(3)), AlephNumber(0));
  OmegaNumber unknown_tail = OmegaNumber::make({{0, q(3)}}, -4);
  EXPECT_THROW(integer_truncation(unknown_tail), PrecisionError);
}

TEST(Archimedean, Examples) {
  auto c = [](long v) { return OmegaNumber::constant(Rational(v)); };
  EXPECT_EQ(archimedean_witness(OmegaNumber::o(), c(1)), kSigma);
  EXPECT_EQ(archimedean_witness(c(2), c(7)), AlephNumber(3));
  EXPECT_EQ(archimedean_witness(c(1), OmegaNumber::sigma()), kSigma);
  EXPECT_EQ(archimedean_witness(c(2), c(-7)), AlephNumber(3));
  EXPECT_EQ(archimedean_witness(c(2), OmegaNumber{}), AlephNumber(0));
  EXPECT_THROW(archimedean_witness(c(-1), c(1)), MathError);
  EXPECT_THROW(archimedean_witness(OmegaNumber{}, c(1)), MathError);
}

// ---- properties ----

TEST(AlephProperty, RoundTrips) {
  Gen gen(42);
  for (int i = 0; i < 200; ++i) {
    R1Point x = gen.lattice_point();
    EXPECT_EQ(psi(phi(x)), x);
    AlephNumber l = gen.aleph(1);
    EXPECT_EQ(phi(psi(l)), l);
  }
}

TEST(AlephProperty, SuccessorIsStrictlyGreater) {
  Gen gen(43);
  for (int i = 0; i < 200; ++i) {
    AlephNumber l = gen.aleph(3);
    EXPECT_NE(successor(l), l);
    EXPECT_EQ(compare_aleph(successor(l), l), std::strong_ordering::greater);
    EXPECT_EQ(predecessor(successor(l)), l);
  }
}

TEST(AlephProperty, InductiveAgreesWithClosedForm) {
  Gen gen(44);
  for (int i = 0; i < 30; ++i) {
    AlephNumber l = gen.aleph(3);
    for (std::size_t m = 0; m <= 20; ++m) {
      AlephNumber mm(static_cast<long>(m));
      EXPECT_EQ(oplus_inductive(l, m), oplus(l, mm));
      EXPECT_EQ(otimes_inductive(l, m), otimes(l, mm));
    }
  }
}

TEST(AlephProperty, PhiTransfersAddition) {
  Gen gen(45);
  for (int i = 0; i < 200; ++i) {
    R1Point x = gen.lattice_point(), y = gen.lattice_point();
    EXPECT_EQ(phi(x + y), oplus(phi(x), phi(y)));
  }
}

TEST(AlephProperty, EmbeddingIsOrderedRingHomomorphism) {
  Gen gen(46);
  for (int i = 0; i < 200; ++i) {
    AlephNumber l = gen.aleph(3), m = gen.aleph(3);
    EXPECT_EQ(compare_aleph(l, m), compare(embed(l), embed(m)));
    EXPECT_EQ(embed(oplus(l, m)), embed(l) + embed(m));
    EXPECT_EQ(embed(otimes(l, m)), embed(l) * embed(m));
    EXPECT_EQ(integer_truncation(embed(l)), l);
  }
}

TEST(AlephProperty, IntegerTruncationBrackets) {
  Gen gen(47);
  for (int i = 0; i < 200; ++i) {
    OmegaNumber x = gen.omega_or_zero(-3, 3);
    AlephNumber l = integer_truncation(x);
    OmegaNumber ax = abs(x);
    EXPECT_TRUE(compare(embed(l), ax) <= 0) << to_string(x);
    EXPECT_TRUE(compare(embed(successor(l)), ax) > 0) << to_string(x);
  }
}

TEST(AlephProperty, ArchimedeanWitness) {
  Gen gen(48);
  for (int i = 0; i < 100; ++i) {
    OmegaNumber a = abs(gen.omega(-4, 2));
    OmegaNumber b = gen.omega_or_zero(-2, 4);
    AlephNumber l = archimedean_witness(a, b);
    EXPECT_TRUE(compare(embed(successor(l)) * a, abs(b)) > 0);
    EXPECT_TRUE(compare(embed(l) * a, abs(b)) <= 0);
  }
}

}  // namespace
}  // namespace omega
