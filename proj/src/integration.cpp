#include "omega/integration.hpp"

#include "omega/errors.hpp"

namespace omega {

PolynomialFn::PolynomialFn(std::vector<Rational> coefficients, std::size_t degree_bound)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
  if (degree() > degree_bound) {
    throw MathError("polynomial degree " + std::to_string(degree()) + " exceeds bound " +
                    std::to_string(degree_bound));
  }
}

Rational PolynomialFn::operator()(const Rational& y) const {
  Rational acc;
  for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * y + coefficients_[i];
  return acc;
}

std::vector<Rational> faulhaber(std::size_t j) {
  // (1/(j+1)) sum_k C(j+1, k) B_k L^(j+1-k), with B_1 = -1/2
  std::vector<Rational> out(j + 2);
  Rational scale(Integer(1), Integer(static_cast<long>(j + 1)));
  for (std::size_t k = 0; k <= j; ++k) {
    out[j + 1 - k] = scale * Rational(binomial(j + 1, k)) * bernoulli(k);
  }
  return out;
}

OmegaNumber discrete_integral(const PolynomialFn& f, const R1Point& upper, const Rational& g0) {
  if (!upper.is_nonnegative()) throw MathError("invalid upper point " + to_string(upper) + ": must be non-negative");
  OmegaNumber count = embed(phi(upper));
  OmegaNumber sum = OmegaNumber::constant(g0);
  for (std::size_t j = 0; j < f.coefficients().size(); ++j) {
    const Rational& a = f.coefficients()[j];
    if (a.is_zero()) continue;
    std::vector<Rational> fj = faulhaber(j);
    OmegaNumber power_sum;
    for (std::size_t i = fj.size(); i-- > 0;) power_sum = add(mul(power_sum, count), OmegaNumber::constant(fj[i]));
    sum = add(sum, mul(scale(power_sum, a), OmegaNumber::o(static_cast<Exponent>(j + 1))));
  }
  return sum;
}

Rational riemann(const PolynomialFn& f, const Rational& t) {
  Rational acc;
  for (std::size_t i = f.coefficients().size(); i-- > 0;) {
    acc = (acc + f.coefficients()[i] / Rational(static_cast<long>(i + 1))) * t;
  }
  return acc;
}

bool difference_equation_check(const PolynomialFn& f, const R1Point& x1, const Rational& g0) {
  R1Point next = x1 + R1Point{Rational(0), Integer(1)};
  OmegaNumber lhs = sub(discrete_integral(f, next, g0), discrete_integral(f, x1, g0));
  OmegaNumber rhs = mul(lift_eval(f.lifted(), x1.to_omega()), OmegaNumber::o(1));
  return lhs == rhs;
}

bool ns_continuity_check(const PolynomialFn& f, const R1Point& x1, std::size_t k, const Rational& g0) {
  if (k == 0) throw MathError("continuity step count must be at least 1");
  R1Point shifted = x1 + R1Point{Rational(0), Integer(static_cast<long>(k))};
  OmegaNumber diff = sub(discrete_integral(f, shifted, g0), discrete_integral(f, x1, g0));
  return diff.is_zero() || ord_o(diff) >= 1;
}

}  // namespace omega
