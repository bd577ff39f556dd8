#pragma once

// Infinite integers. Lattice points t + k o of R_o^1 are counted in steps of
// o from o upward; the count of [[o, 1]] is the infinite unit S, and the
// lattice point t + k o corresponds to the integer t S + k. Closing under the
// inductive sum and product gives the ring of polynomials
//
//   a_0 + a_1 S + ... + a_N S^N,   N >= 1, a_0 integer, a_N > 0
//                                  or N = 0, a_0 a natural number,
//
// ordered lexicographically with 1 << S, and embedded in the field of
// OmegaNumbers by reading S as the infinite unit there.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "omega/exact_numeric.hpp"
#include "omega/omega_number.hpp"

namespace omega {

/// t + k o.
struct R1Point {
  Rational t;
  Integer k;

  /// t > 0, or t = 0 and k >= 0.
  [[nodiscard]] bool is_nonnegative() const { return t.sign() > 0 || (t.is_zero() && k.sign() >= 0); }
  [[nodiscard]] OmegaNumber to_omega() const;

  friend bool operator==(const R1Point&, const R1Point&) = default;
  friend std::strong_ordering operator<=>(const R1Point& a, const R1Point& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.k <=> b.k;
  }
  friend R1Point operator+(const R1Point& a, const R1Point& b) { return {a.t + b.t, a.k + b.k}; }
  friend R1Point operator-(const R1Point& a, const R1Point& b) { return {a.t - b.t, a.k - b.k}; }
};

enum class Inclusivity { kClosed, kRightOpen };

/// [[lo, hi]] or [[lo, hi[[ on the lattice of step o.
class R1Interval {
 public:
  /// Throws MathError unless lo <= hi.
  R1Interval(R1Point lo, R1Point hi, Inclusivity inclusivity = Inclusivity::kClosed);

  [[nodiscard]] const R1Point& lo() const { return lo_; }
  [[nodiscard]] const R1Point& hi() const { return hi_; }
  [[nodiscard]] Inclusivity inclusivity() const { return inclusivity_; }
  [[nodiscard]] bool empty() const { return inclusivity_ == Inclusivity::kRightOpen && lo_ == hi_; }

 private:
  R1Point lo_;
  R1Point hi_;
  Inclusivity inclusivity_;
};

class AlephNumber {
 public:
  /// Zero.
  AlephNumber() : coeffs_{Rational(0)} {}
  /// Coefficients a_0 .. a_N; trailing zeros are dropped. Throws MathError
  /// when the membership condition fails.
  explicit AlephNumber(std::vector<Rational> coeffs);
  AlephNumber(long n) : AlephNumber(std::vector<Rational>{Rational(n)}) {}  // NOLINT(google-explicit-constructor)

  static AlephNumber sigma() { return AlephNumber({Rational(0), Rational(1)}); }
  static bool is_valid(const std::vector<Rational>& coeffs);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& coeff(std::size_t k) const { return coeffs_.at(k); }
  [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  /// True for the standard naturals.
  [[nodiscard]] bool is_standard() const { return coeffs_.size() == 1; }

  friend bool operator==(const AlephNumber&, const AlephNumber&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Number of lattice points in the interval: phi(hi - lo), plus one if closed.
AlephNumber count_interval(const R1Interval& interval);

/// t + k o  ->  t S + k, on non-negative lattice points.
AlephNumber phi(const R1Point& x);
/// a_1 S + a_0  ->  a_1 + a_0 o; requires degree <= 1.
R1Point psi(const AlephNumber& l);

AlephNumber successor(const AlephNumber& l);
/// Throws MathError on zero.
AlephNumber predecessor(const AlephNumber& l);

/// Closed-form sum and product (polynomial arithmetic in S).
AlephNumber oplus(const AlephNumber& l, const AlephNumber& m);
AlephNumber otimes(const AlephNumber& l, const AlephNumber& m);

/// L + m computed only through L + 0 = L and L + S(M) = (L + M) + 1.
AlephNumber oplus_inductive(const AlephNumber& l, std::size_t m);
/// L m computed through L 1 = L and L S(M) = L M + L; L 0 = 0.
AlephNumber otimes_inductive(const AlephNumber& l, std::size_t m);

std::strong_ordering compare_aleph(const AlephNumber& l, const AlephNumber& m);

OmegaNumber embed(const AlephNumber& l);

/// The infinite integer L with L <= |x| < L + 1: positive-degree
/// coefficients kept, the constant floored, infinitesimals dropped (with the
/// constant lowered by one when it is an integer and the infinitesimal tail
/// is negative).
AlephNumber integer_truncation(const OmegaNumber& x);

/// L with (L + 1) a > |b|, for a > 0.
AlephNumber archimedean_witness(const OmegaNumber& a, const OmegaNumber& b);

std::string to_string(const AlephNumber& l);
std::string to_string(const R1Point& x);
std::ostream& operator<<(std::ostream& os, const AlephNumber& l);
std::ostream& operator<<(std::ostream& os, const R1Point& x);

}  // namespace omega
