#include "omega/lift_calculus.hpp"

#include <algorithm>
#include <utility>

#include "decimal.hpp"
#include "omega/errors.hpp"
#include "series.hpp"

namespace omega {

namespace {

bool everywhere(const Rational&) { return true; }
bool positive(const Rational& t) { return t.sign() > 0; }

// Taylor coefficients of the polynomial p at t: p(t + h) = sum_i out[i] h^i.
std::vector<Rational> taylor_shift(const std::vector<Rational>& p, const Rational& t) {
  std::vector<Rational> out(p.size());
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m].is_zero()) continue;
    Rational power(1);  // t^(m-i), built from i = m downward
    for (std::size_t i = m + 1; i-- > 0;) {
      out[i] += p[m] * Rational(binomial(m, i)) * power;
      power *= t;
    }
  }
  return out;
}

Rational evaluate(const std::vector<Rational>& p, const Rational& t) {
  Rational acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

Rational power_derivative(const Rational& alpha, std::size_t k, const Rational& t, std::optional<unsigned> digits) {
  Rational falling = falling_factorial(alpha, k);
  if (falling.is_zero()) return falling;
  Rational exponent = alpha - Rational(static_cast<long>(k));
  if (auto exact = exact_power(t, exponent)) return falling * *exact;
  if (!digits) {
    throw MathError("irrational value: " + t.to_string() + "^" + exponent.to_string() +
                    " needs decimal mode");
  }
  return falling * detail::round_power(t, exponent, *digits);
}

LiftedFunction::Domain power_domain(const Rational& alpha) {
  if (alpha.is_integer()) {
    if (alpha.sign() >= 0) return everywhere;
    return [](const Rational& t) { return !t.is_zero(); };
  }
  return positive;
}

std::string describe(const Rational& t) { return t.to_string(); }

}  // namespace

LiftedFunction::LiftedFunction(Oracle oracle, Domain domain, EvalMode mode,
                               std::optional<std::size_t> polynomial_degree, unsigned digits)
    : oracle_(std::move(oracle)),
      domain_(std::move(domain)),
      mode_(mode),
      degree_(polynomial_degree),
      digits_(digits) {}

LiftedFunction LiftedFunction::polynomial(std::vector<Rational> coefficients) {
  while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
  std::size_t degree = coefficients.empty() ? 0 : coefficients.size() - 1;
  auto oracle = [p = std::move(coefficients)](std::size_t k, const Rational& t) {
    if (k >= p.size()) return Rational(0);
    std::vector<Rational> shifted = taylor_shift(p, t);
    return shifted[k] * Rational(factorial(k));
  };
  return {std::move(oracle), everywhere, EvalMode::kExact, degree};
}

LiftedFunction LiftedFunction::rational(std::vector<Rational> numerator, std::vector<Rational> denominator) {
  while (!denominator.empty() && denominator.back().is_zero()) denominator.pop_back();
  if (denominator.empty()) throw MathError("division by zero");
  auto domain = [q = denominator](const Rational& t) { return !evaluate(q, t).is_zero(); };
  auto oracle = [p = std::move(numerator), q = std::move(denominator)](std::size_t k, const Rational& t) {
    detail::Dense num = taylor_shift(p, t);
    detail::Dense den = taylor_shift(q, t);
    detail::Dense s = detail::mul_trunc(num, detail::inverse_trunc(den, k), k);
    s.resize(k + 1);
    return s[k] * Rational(factorial(k));
  };
  return {std::move(oracle), std::move(domain)};
}

LiftedFunction LiftedFunction::power(const Rational& alpha) {
  std::optional<std::size_t> degree;
  if (alpha.is_integer() && alpha.sign() >= 0) degree = static_cast<std::size_t>(alpha.numerator().to_long());
  auto oracle = [alpha](std::size_t k, const Rational& t) { return power_derivative(alpha, k, t, std::nullopt); };
  return {std::move(oracle), power_domain(alpha), EvalMode::kExact, degree};
}

LiftedFunction LiftedFunction::power(const Rational& alpha, unsigned digits) {
  auto oracle = [alpha, digits](std::size_t k, const Rational& t) {
    return power_derivative(alpha, k, t, digits);
  };
  return {std::move(oracle), power_domain(alpha), EvalMode::kDecimal, std::nullopt, digits};
}

LiftedFunction LiftedFunction::exp(unsigned digits) {
  auto oracle = [digits](std::size_t, const Rational& t) {
    return detail::round_decimal(detail::Transcendental::kExp, t, digits);
  };
  return {std::move(oracle), everywhere, EvalMode::kDecimal, std::nullopt, digits};
}

LiftedFunction LiftedFunction::sin(unsigned digits) {
  auto oracle = [digits](std::size_t k, const Rational& t) {
    Rational s = detail::round_decimal(k % 2 == 0 ? detail::Transcendental::kSin : detail::Transcendental::kCos, t,
                                       digits);
    return (k % 4 >= 2) ? -s : s;
  };
  return {std::move(oracle), everywhere, EvalMode::kDecimal, std::nullopt, digits};
}

LiftedFunction LiftedFunction::cos(unsigned digits) {
  auto oracle = [digits](std::size_t k, const Rational& t) {
    Rational c = detail::round_decimal(k % 2 == 0 ? detail::Transcendental::kCos : detail::Transcendental::kSin, t,
                                       digits);
    // cos, -sin, -cos, sin
    return (k % 4 == 1 || k % 4 == 2) ? -c : c;
  };
  return {std::move(oracle), everywhere, EvalMode::kDecimal, std::nullopt, digits};
}

LiftedFunction LiftedFunction::log(unsigned digits) {
  auto oracle = [digits](std::size_t k, const Rational& t) {
    if (k == 0) return detail::round_decimal(detail::Transcendental::kLog, t, digits);
    // (-1)^(k-1) (k-1)! / t^k
    Rational r = Rational(factorial(k - 1)) / pow(t, static_cast<long>(k));
    return (k % 2 == 0) ? -r : r;
  };
  return {std::move(oracle), positive, EvalMode::kDecimal, std::nullopt, digits};
}

Rational LiftedFunction::derivative_at(std::size_t k, const Rational& t) const {
  if (!domain_(t)) throw MathError("domain violation at t = " + describe(t));
  return oracle_(k, t);
}

LiftedFunction LiftedFunction::derivative(std::size_t q) const {
  if (q == 0) return *this;
  std::optional<std::size_t> degree;
  if (degree_) degree = *degree_ >= q ? *degree_ - q : 0;
  auto oracle = [inner = oracle_, q](std::size_t k, const Rational& t) { return inner(k + q, t); };
  return {std::move(oracle), domain_, mode_, degree, digits_};
}

OmegaNumber lift_eval(const LiftedFunction& f, const OmegaNumber& x, std::size_t depth) {
  if (!x.in_series_algebra()) throw MathError("lift requires an element of R_o, got " + to_string(x));
  Rational t = standard_part(x);
  if (!f.in_domain(t)) throw MathError("domain violation at t = " + describe(t));
  OmegaNumber u = infinitesimal_part(x);

  if (f.polynomial_degree() && x.is_exact()) {
    OmegaNumber acc;
    for (std::size_t k = *f.polynomial_degree() + 1; k-- > 0;) {
      Rational c = f.derivative_at(k, t) / Rational(factorial(k));
      acc = add(mul(acc, u), OmegaNumber::constant(c));
    }
    return acc;
  }

  std::size_t n = depth;
  if (x.floor()) n = std::min<std::size_t>(n, static_cast<std::size_t>(-*x.floor()));
  std::size_t terms = f.polynomial_degree() ? std::min(n, *f.polynomial_degree()) : n;
  detail::Dense coeffs(terms + 1);
  for (std::size_t k = 0; k <= terms; ++k) coeffs[k] = f.derivative_at(k, t) / Rational(factorial(k));
  detail::Dense dense_u(n + 1);
  for (std::size_t j = 1; j <= n; ++j) dense_u[j] = u.coeff(-static_cast<Exponent>(j));
  detail::Dense s = detail::compose_trunc(coeffs, dense_u, n);
  std::vector<Term> out;
  for (std::size_t j = 0; j <= n; ++j) out.push_back({-static_cast<Exponent>(j), s[j]});
  return OmegaNumber::make(std::move(out), -static_cast<Exponent>(n));
}

OmegaNumber difference(const LiftedFunction& f, const OmegaNumber& x, std::size_t p, std::size_t depth) {
  if (p == 0) throw MathError("difference order must be at least 1");
  OmegaNumber sum;
  for (std::size_t k = 0; k <= p; ++k) {
    OmegaNumber shifted = add(x, OmegaNumber::monomial(Rational(static_cast<long>(k)), -1));
    OmegaNumber term = scale(lift_eval(f, shifted, depth), Rational(binomial(p, k)));
    sum = ((p - k) % 2 == 0) ? add(sum, term) : sub(sum, term);
  }
  return sum;
}

OmegaNumber differential(const LiftedFunction& f, const OmegaNumber& x, std::size_t n, std::size_t depth) {
  return mul(lift_eval(f.derivative(n), x, depth), OmegaNumber::o(static_cast<Exponent>(n)));
}

std::string to_string(TableDirection direction) {
  return direction == TableDirection::kDToCapitalD ? "d_to_D" : "D_to_d";
}

TableDirection parse_direction(const std::string& text) {
  if (text == "d_to_D") return TableDirection::kDToCapitalD;
  if (text == "D_to_d") return TableDirection::kCapitalDToD;
  throw MathError("unknown table direction '" + text + "' (expected d_to_D or D_to_d)");
}

CoeffTable::CoeffTable(TableDirection direction, std::size_t cutoff)
    : direction_(direction), cutoff_(cutoff), rows_(cutoff, std::vector<Rational>(cutoff)) {}

const Rational& CoeffTable::at(std::size_t row, std::size_t col) const { return rows_.at(row - 1).at(col - 1); }

Rational& CoeffTable::at(std::size_t row, std::size_t col) { return rows_.at(row - 1).at(col - 1); }

std::vector<Rational> CoeffTable::row_from_diagonal(std::size_t row) const {
  const auto& r = rows_.at(row - 1);
  return {r.begin() + static_cast<std::ptrdiff_t>(row - 1), r.end()};
}

CoeffTable d_to_D_table(std::size_t max_order) {
  if (max_order == 0) throw MathError("table order must be at least 1");
  CoeffTable table(TableDirection::kDToCapitalD, max_order);
  for (std::size_t p = 1; p <= max_order; ++p) {
    for (std::size_t n = p; n <= max_order; ++n) {
      table.at(p, n) = Rational(x_coeff(p, n), factorial(n));
    }
  }
  return table;
}

CoeffTable D_to_d_table(std::size_t max_order) {
  if (max_order == 0) throw MathError("table order must be at least 1");
  CoeffTable table(TableDirection::kCapitalDToD, max_order);
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (std::size_t p = n; p <= max_order; ++p) {
      Rational entry = Rational(factorial(n) * k_coeff(p - 1, p - n), factorial(p));
      table.at(n, p) = ((p - n) % 2 == 0) ? entry : -entry;
    }
  }
  return table;
}

bool ns_diff_check(const LiftedFunction& f, const Rational& t, const OmegaNumber& h, std::size_t depth) {
  if (!h.is_exact() || h.is_zero() || !h.is_infinitesimal()) {
    throw MathError("increment must be an exact nonzero infinitesimal, got " + to_string(h));
  }
  Exponent order = ord_o(h);
  OmegaNumber base = OmegaNumber::constant(t);
  OmegaNumber remainder = sub(sub(lift_eval(f, add(base, h), depth), lift_eval(f, base, depth)),
                              mul(lift_eval(f.derivative(1), base, depth), h));
  return vanishes_above(remainder, -2 * order);
}

}  // namespace omega
