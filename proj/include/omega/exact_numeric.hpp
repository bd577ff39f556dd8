#pragma once

// Exact arbitrary-precision integers and rationals, plus the combinatorial
// coefficient families shared by the series, calculus and integration code.
//
// Bernoulli numbers follow the B_1 = -1/2 convention, which is the one that
// makes sum_{n=0}^{L-1} n^j a polynomial in L with Bernoulli coefficients.
// Powers use 0^0 = 1 throughout.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace omega {

class Integer {
 public:
  Integer() = default;
  Integer(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Integer(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class value) : value_(std::move(value)) {}

  /// Parses an optionally signed decimal integer; throws MathError.
  static Integer parse(std::string_view text);

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool fits_long() const { return value_.fits_slong_p(); }
  [[nodiscard]] long to_long() const;
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }
  [[nodiscard]] const mpz_class& raw() const { return value_; }

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
  friend Integer operator-(const Integer& x) { return Integer(mpz_class(-x.value_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

/// Canonical exact rational: positive denominator, coprime parts.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value.raw()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(mpq_class value);

  /// Accepts "a", "-a/b" and terminating decimals such as "0.125".
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
  [[nodiscard]] Integer denominator() const { return Integer(mpz_class(value_.get_den())); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] Integer floor() const;
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  /// "num/den" with the "/1" suppressed for integers.
  [[nodiscard]] std::string to_string() const;
  /// Always "num/den", as used by the JSON schemas.
  [[nodiscard]] std::string to_fraction_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws MathError on zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Integer& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// x^n for a signed machine exponent; throws MathError for 0^n with n < 0.
Rational pow(const Rational& x, long n);

/// base^exponent when the result is rational, std::nullopt otherwise.
/// Throws MathError for 0 raised to a negative power.
std::optional<Rational> exact_power(const Rational& base, const Rational& exponent);

Integer factorial(std::size_t n);

/// Ordinary binomial coefficient C(n, k) for naturals; zero when k > n.
Integer binomial(std::size_t n, std::size_t k);

/// alpha (alpha-1) ... (alpha-k+1) / k! for any rational alpha.
Rational binomial_general(const Rational& alpha, std::size_t k);

/// alpha (alpha-1) ... (alpha-k+1).
Rational falling_factorial(const Rational& alpha, std::size_t k);

/// Bernoulli number B_m with B_1 = -1/2.
Rational bernoulli(std::size_t m);

/// sum_{k=0}^{p} (-1)^{p-k} C(p,k) k^n, the coefficient linking the finite
/// difference of order p to the differential of order n.
Integer x_coeff(std::size_t p, std::size_t n);

/// Elementary symmetric polynomial e_j(1, 2, ..., m). Throws MathError if j > m.
Integer k_coeff(std::size_t m, std::size_t j);

/// Stirling numbers of the second kind, S(n, p).
Integer stirling2(std::size_t n, std::size_t p);

/// Unsigned Stirling numbers of the first kind, c(p, n).
Integer stirling1_unsigned(std::size_t p, std::size_t n);

}  // namespace omega
