#pragma once

// Analytic lifting of smooth real functions into R_o, and the two families
// of differentials built on it:
//
//   D^p f(x) = sum_{k=0}^{p} (-1)^{p-k} C(p,k) f(x + k o)    (finite differences)
//   d^n f(x) = f^(n)(x) o^n                                    (Leibniz differentials)
//
// A function is presented by its derivative oracle k -> f^(k)(t). Lifting
// evaluates the Taylor series at the standard part t in powers of the
// infinitesimal part u, which converges coefficientwise in R_o whatever the
// real radius of convergence.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omega/exact_numeric.hpp"
#include "omega/omega_number.hpp"

namespace omega {

enum class EvalMode {
  kExact,    // every derivative value is exact
  kDecimal,  // values are rounded to a fixed number of decimal digits
};

inline constexpr unsigned kDefaultDecimalDigits = 50;

class LiftedFunction {
 public:
  using Oracle = std::function<Rational(std::size_t k, const Rational& t)>;
  using Domain = std::function<bool(const Rational& t)>;

  /// `polynomial_degree` marks a polynomial, whose lift of an exact point is
  /// itself exact with finite support.
  LiftedFunction(Oracle oracle, Domain domain, EvalMode mode = EvalMode::kExact,
                 std::optional<std::size_t> polynomial_degree = std::nullopt,
                 unsigned digits = kDefaultDecimalDigits);

  /// Coefficients in increasing degree.
  static LiftedFunction polynomial(std::vector<Rational> coefficients);
  /// P / Q, defined wherever Q does not vanish.
  static LiftedFunction rational(std::vector<Rational> numerator, std::vector<Rational> denominator);
  /// t^alpha. Exact where t^alpha is rational; MathError otherwise.
  static LiftedFunction power(const Rational& alpha);
  /// t^alpha, rounding irrational values to `digits` decimals.
  static LiftedFunction power(const Rational& alpha, unsigned digits);
  static LiftedFunction exp(unsigned digits = kDefaultDecimalDigits);
  static LiftedFunction sin(unsigned digits = kDefaultDecimalDigits);
  static LiftedFunction cos(unsigned digits = kDefaultDecimalDigits);
  static LiftedFunction log(unsigned digits = kDefaultDecimalDigits);

  [[nodiscard]] bool in_domain(const Rational& t) const { return domain_(t); }
  /// f^(k)(t); throws MathError outside the domain.
  [[nodiscard]] Rational derivative_at(std::size_t k, const Rational& t) const;
  [[nodiscard]] Rational operator()(const Rational& t) const { return derivative_at(0, t); }

  [[nodiscard]] EvalMode mode() const { return mode_; }
  [[nodiscard]] unsigned digits() const { return digits_; }
  [[nodiscard]] std::optional<std::size_t> polynomial_degree() const { return degree_; }

  /// The q-th derivative, sharing this function's oracle.
  [[nodiscard]] LiftedFunction derivative(std::size_t q) const;

 private:
  Oracle oracle_;
  Domain domain_;
  EvalMode mode_;
  std::optional<std::size_t> degree_;
  unsigned digits_;
};

/// sum_{k=0}^{depth} f^(k)(t) u^k / k! with t = standard_part(x) and
/// u = infinitesimal_part(x), known down to o^depth (or to x's own floor if
/// higher). Polynomials at exact points give the exact finite sum.
OmegaNumber lift_eval(const LiftedFunction& f, const OmegaNumber& x, std::size_t depth = kDefaultDepth);

inline LiftedFunction derivative(const LiftedFunction& f, std::size_t q) { return f.derivative(q); }

/// D^p f(x) by the alternating sum of lifts at x + k o.
OmegaNumber difference(const LiftedFunction& f, const OmegaNumber& x, std::size_t p,
                       std::size_t depth = kDefaultDepth);

/// d^n f(x) = f^(n)(x) o^n.
OmegaNumber differential(const LiftedFunction& f, const OmegaNumber& x, std::size_t n,
                         std::size_t depth = kDefaultDepth);

enum class TableDirection {
  kDToCapitalD,  // D^p in terms of d^n: entry (p, n) = X_p^n / n!
  kCapitalDToD,  // d^n in terms of D^p: entry (n, p) = n! (-1)^(p-n) K_{p-1}^{p-n} / p!
};

std::string to_string(TableDirection direction);  // "d_to_D" / "D_to_d"
TableDirection parse_direction(const std::string& text);

/// Square upper-triangular conversion matrix with 1-based indices
/// 1..cutoff in both directions; entries below the diagonal are zero.
class CoeffTable {
 public:
  CoeffTable(TableDirection direction, std::size_t cutoff);

  [[nodiscard]] TableDirection direction() const { return direction_; }
  [[nodiscard]] std::size_t cutoff() const { return cutoff_; }
  [[nodiscard]] const Rational& at(std::size_t row, std::size_t col) const;
  Rational& at(std::size_t row, std::size_t col);
  /// Row `row` from the diagonal onward, as printed in the text output.
  [[nodiscard]] std::vector<Rational> row_from_diagonal(std::size_t row) const;
  [[nodiscard]] const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  TableDirection direction_;
  std::size_t cutoff_;
  std::vector<std::vector<Rational>> rows_;
};

/// D^p f(t) = sum_{n >= p} (X_p^n / n!) d^n f(t). Requires max_order >= 1.
CoeffTable d_to_D_table(std::size_t max_order);

/// d^n f(t) = n! sum_{p >= n} (-1)^(p-n) K_{p-1}^{p-n} D^p f(t) / p!,
/// including the unit diagonal term p = n. Requires max_order >= 1.
CoeffTable D_to_d_table(std::size_t max_order);

/// Order-topology differentiability at t: whether
/// f(t + h) - f(t) - f'(t) h has ord_o >= 2 ord_o(h). h must be an exact,
/// nonzero infinitesimal. Throws PrecisionError if depth is too shallow to
/// decide.
bool ns_diff_check(const LiftedFunction& f, const Rational& t, const OmegaNumber& h,
                   std::size_t depth = kDefaultDepth);

}  // namespace omega
