#pragma once

// Discrete integral sums over the lattice of step o, in closed form.
//
// For polynomial f, the sum of f(n o) o over n = 0 .. L - 1 is
// sum_j a_j F_j(L) o^(j+1), where F_j is the power-sum polynomial. With
// L = phi(x1) read as an element of the field, the sum is exact.

#include <cstddef>
#include <vector>

#include "omega/aleph.hpp"
#include "omega/exact_numeric.hpp"
#include "omega/lift_calculus.hpp"
#include "omega/omega_number.hpp"

namespace omega {

inline constexpr std::size_t kDefaultDegreeBound = 12;

class PolynomialFn {
 public:
  /// Coefficients a_0 .. a_d; trailing zeros dropped. Throws MathError when
  /// the degree exceeds the bound.
  explicit PolynomialFn(std::vector<Rational> coefficients, std::size_t degree_bound = kDefaultDegreeBound);

  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coefficients_; }
  [[nodiscard]] std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  [[nodiscard]] Rational operator()(const Rational& y) const;
  [[nodiscard]] LiftedFunction lifted() const { return LiftedFunction::polynomial(coefficients_); }

 private:
  std::vector<Rational> coefficients_;
};

/// F_j with F_j(L) = 0^j + 1^j + ... + (L-1)^j, as coefficients of L^0 .. L^(j+1).
std::vector<Rational> faulhaber(std::size_t j);

/// G0 + sum over y in [[0, upper[[ of f(y) o.
OmegaNumber discrete_integral(const PolynomialFn& f, const R1Point& upper, const Rational& g0);

/// Integral of f from 0 to t.
Rational riemann(const PolynomialFn& f, const Rational& t);

/// G(x1 + o) - G(x1) == f(x1) o, exactly.
bool difference_equation_check(const PolynomialFn& f, const R1Point& x1, const Rational& g0);

/// G(x1 + k o) - G(x1) is infinitesimal.
bool ns_continuity_check(const PolynomialFn& f, const R1Point& x1, std::size_t k, const Rational& g0);

}  // namespace omega
