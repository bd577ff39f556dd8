#pragma once

// OmegaNumber: a truncated formal series sum_{k <= top} a_k S^k with exact
// rational coefficients, where S is the infinite unit and o = S^-1 the
// infinitesimal one. Elements with top <= 0 form the series algebra R_o;
// a single term at k = 0 is a plain rational.
//
// Precision model. Each value carries a floor: every coefficient at an
// exponent >= floor is exact, nothing is claimed below it. A value with no
// floor is exact with finite support. Arithmetic propagates floors so that
// every reported coefficient is correct:
//
//   add        floor = max of the operands' finite floors
//   mul        floor = max(floor_x + top_y, floor_y + top_x)
//   invert     floor = floor_x - 2 top_x, capped at -depth
//
// Cancellation in add may leave a value whose known coefficients are all
// zero. Such a value is kept (it is "zero down to its floor") but has no
// top; operations that need a leading term raise PrecisionError on it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omega/exact_numeric.hpp"

namespace omega {

using Exponent = std::int64_t;

/// Working depth used when an operation produces an infinite series.
inline constexpr std::size_t kDefaultDepth = 16;

struct Term {
  Exponent exponent;
  Rational value;

  friend bool operator==(const Term&, const Term&) = default;
};

class OmegaNumber {
 public:
  /// The exact zero element.
  OmegaNumber() = default;

  /// Canonicalizes the entries: zero coefficients are dropped and the terms
  /// sorted by decreasing exponent. `floor == std::nullopt` means exact.
  /// Throws MathError on duplicate exponents or an entry below the floor.
  static OmegaNumber make(std::vector<Term> entries, std::optional<Exponent> floor = std::nullopt);

  static OmegaNumber constant(const Rational& value);
  /// c S^e, exact.
  static OmegaNumber monomial(const Rational& c, Exponent e);
  /// S^n.
  static OmegaNumber sigma(Exponent n = 1) { return monomial(Rational(1), n); }
  /// o^n = S^-n.
  static OmegaNumber o(Exponent n = 1) { return monomial(Rational(1), -n); }

  [[nodiscard]] bool is_zero() const { return terms_.empty() && !floor_; }
  [[nodiscard]] bool is_exact() const { return !floor_.has_value(); }
  [[nodiscard]] std::optional<Exponent> floor() const { return floor_; }
  /// True when at least one known coefficient is nonzero.
  [[nodiscard]] bool has_leading_term() const { return !terms_.empty(); }
  /// True when every known coefficient is zero but the value is truncated.
  [[nodiscard]] bool vanishes_to_precision() const { return terms_.empty() && floor_.has_value(); }

  /// Largest exponent with a nonzero coefficient. Throws MathError on zero,
  /// PrecisionError when no nonzero coefficient is known.
  [[nodiscard]] Exponent top() const;
  [[nodiscard]] const Rational& leading_coefficient() const;
  /// Coefficient of S^e; throws PrecisionError when e is below the floor.
  [[nodiscard]] Rational coeff(Exponent e) const;
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }

  /// Sign of the value: -1, 0 or 1. Throws PrecisionError when unknown.
  [[nodiscard]] int sign() const;
  /// Whether the value lies in R_o, i.e. has no positive S-exponent.
  [[nodiscard]] bool in_series_algebra() const;
  [[nodiscard]] bool is_infinitesimal() const;
  [[nodiscard]] bool is_standard() const;

  /// Structural equality: same coefficients and same floor.
  friend bool operator==(const OmegaNumber&, const OmegaNumber&) = default;

 private:
  OmegaNumber(std::vector<Term> terms, std::optional<Exponent> floor)
      : terms_(std::move(terms)), floor_(floor) {}

  friend OmegaNumber add(const OmegaNumber& x, const OmegaNumber& y);
  friend OmegaNumber mul(const OmegaNumber& x, const OmegaNumber& y);
  friend OmegaNumber neg(const OmegaNumber& x);

  std::vector<Term> terms_;  // strictly decreasing exponents, no zeros
  std::optional<Exponent> floor_;
};

OmegaNumber add(const OmegaNumber& x, const OmegaNumber& y);
OmegaNumber neg(const OmegaNumber& x);
OmegaNumber sub(const OmegaNumber& x, const OmegaNumber& y);
OmegaNumber mul(const OmegaNumber& x, const OmegaNumber& y);
OmegaNumber abs(const OmegaNumber& x);
OmegaNumber scale(const OmegaNumber& x, const Rational& c);

inline OmegaNumber operator+(const OmegaNumber& x, const OmegaNumber& y) { return add(x, y); }
inline OmegaNumber operator-(const OmegaNumber& x, const OmegaNumber& y) { return sub(x, y); }
inline OmegaNumber operator-(const OmegaNumber& x) { return neg(x); }
inline OmegaNumber operator*(const OmegaNumber& x, const OmegaNumber& y) { return mul(x, y); }

/// Lexicographic order, reading from the largest S-exponent downward.
/// Throws PrecisionError when all coefficients above both floors agree but
/// one of the values is truncated.
std::strong_ordering compare(const OmegaNumber& x, const OmegaNumber& y);

/// Least o-exponent with a nonzero coefficient. Requires x in R_o, x != 0.
Exponent ord_o(const OmegaNumber& x);
/// The coefficient a_0 of x in R_o.
Rational standard_part(const OmegaNumber& x);
OmegaNumber infinitesimal_part(const OmegaNumber& x);
/// The term a_k o^k of x in R_o.
OmegaNumber moment(const OmegaNumber& x, std::size_t k);

/// True when every coefficient at an exponent strictly above `e` is zero,
/// i.e. |x| < c S^(e+1) for every standard c > 0. False as soon as a known
/// nonzero coefficient sits above `e`; PrecisionError when the answer hinges
/// on coefficients below the floor.
bool vanishes_above(const OmegaNumber& x, Exponent e);

/// Keeps the exponents >= -n and marks the result exact. Throws
/// PrecisionError when x is not known down to exponent -n.
OmegaNumber truncate(const OmegaNumber& x, std::size_t n);

/// Multiplicative inverse, known down to exponent -depth or to the limit set
/// by x's own floor, whichever is higher. Monomials invert exactly.
OmegaNumber invert(const OmegaNumber& x, std::size_t depth = kDefaultDepth);
OmegaNumber divide(const OmegaNumber& x, const OmegaNumber& y, std::size_t depth = kDefaultDepth);

/// x^alpha. The leading term becomes a_N^alpha S^(alpha N); the rest is the
/// binomial series in u = x / (a_N S^N) - 1. Non-negative integer powers of
/// exact values stay exact.
OmegaNumber pow_alpha(const OmegaNumber& x, const Rational& alpha, std::size_t depth = kDefaultDepth);

/// Expansion of P(o)/Q(o) as a series; P and Q are given by their
/// coefficients in increasing powers of o. A zero of order k of Q at o = 0
/// contributes the factor S^k. Exact when Q divides P as polynomials.
OmegaNumber expand_rational(std::span<const Rational> p, std::span<const Rational> q,
                            std::size_t depth = kDefaultDepth);

using Sequence = std::function<OmegaNumber(std::size_t)>;

/// Limit of a sequence whose moments stabilize. For each j <= depth the
/// truncation at o^j must stay unchanged over `window` consecutive steps
/// (window + 1 equal values) starting no earlier than where moment j-1
/// stabilized. `seq` must be pure. Throws NotCauchyError when some moment
/// fails to stabilize by index max_index.
OmegaNumber cauchy_limit(const Sequence& seq, std::size_t window, std::size_t max_index,
                         std::size_t depth = kDefaultDepth);

/// Canonical text form, e.g. "3*S^2 + 1/2 - 5/128*o^4 [floor=-6]".
std::string to_string(const OmegaNumber& x);
std::ostream& operator<<(std::ostream& os, const OmegaNumber& x);

}  // namespace omega
