#include "omega/aleph.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "omega/errors.hpp"

namespace omega {

namespace {

std::vector<Rational> trim(std::vector<Rational> coeffs) {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) coeffs.emplace_back();
  return coeffs;
}

std::string describe(const std::vector<Rational>& coeffs) {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ", ";
    s += coeffs[i].to_string();
  }
  return s + "]";
}

}  // namespace

OmegaNumber R1Point::to_omega() const {
  return add(OmegaNumber::constant(t), OmegaNumber::monomial(Rational(k), -1));
}

R1Interval::R1Interval(R1Point lo, R1Point hi, Inclusivity inclusivity)
    : lo_(std::move(lo)), hi_(std::move(hi)), inclusivity_(inclusivity) {
  if (hi_ < lo_) throw MathError("interval endpoints out of order: " + to_string(lo_) + " > " + to_string(hi_));
}

AlephNumber::AlephNumber(std::vector<Rational> coeffs) : coeffs_(trim(std::move(coeffs))) {
  if (!is_valid(coeffs_)) throw MathError("not an infinite integer: coefficients " + describe(coeffs_));
}

bool AlephNumber::is_valid(const std::vector<Rational>& raw) {
  std::vector<Rational> coeffs = trim(raw);
  if (!coeffs[0].is_integer()) return false;
  if (coeffs.size() == 1) return coeffs[0].sign() >= 0;
  return coeffs.back().sign() > 0;
}

AlephNumber count_interval(const R1Interval& interval) {
  if (interval.empty()) throw MathError("empty interval");
  AlephNumber span = phi(interval.hi() - interval.lo());
  return interval.inclusivity() == Inclusivity::kClosed ? successor(span) : span;
}

AlephNumber phi(const R1Point& x) {
  if (!x.is_nonnegative()) throw MathError("phi requires a non-negative lattice point, got " + to_string(x));
  return AlephNumber({Rational(x.k), x.t});
}

R1Point psi(const AlephNumber& l) {
  if (l.degree() > 1) throw MathError("psi: " + to_string(l) + " has no lattice preimage (degree > 1)");
  Rational t = l.degree() == 1 ? l.coeff(1) : Rational(0);
  return {t, l.coeff(0).numerator()};
}

AlephNumber successor(const AlephNumber& l) {
  std::vector<Rational> c = l.coeffs();
  c[0] += Rational(1);
  return AlephNumber(std::move(c));
}

AlephNumber predecessor(const AlephNumber& l) {
  if (l.is_zero()) throw MathError("zero has no predecessor");
  std::vector<Rational> c = l.coeffs();
  c[0] -= Rational(1);
  return AlephNumber(std::move(c));
}

AlephNumber oplus(const AlephNumber& l, const AlephNumber& m) {
  std::vector<Rational> c(std::max(l.coeffs().size(), m.coeffs().size()));
  for (std::size_t i = 0; i < l.coeffs().size(); ++i) c[i] += l.coeff(i);
  for (std::size_t i = 0; i < m.coeffs().size(); ++i) c[i] += m.coeff(i);
  return AlephNumber(std::move(c));
}

AlephNumber otimes(const AlephNumber& l, const AlephNumber& m) {
  std::vector<Rational> c(l.coeffs().size() + m.coeffs().size() - 1);
  for (std::size_t i = 0; i < l.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < m.coeffs().size(); ++j) c[i + j] += l.coeff(i) * m.coeff(j);
  }
  return AlephNumber(std::move(c));
}

AlephNumber oplus_inductive(const AlephNumber& l, std::size_t m) {
  AlephNumber r = l;
  for (std::size_t i = 0; i < m; ++i) r = successor(r);
  return r;
}

AlephNumber otimes_inductive(const AlephNumber& l, std::size_t m) {
  if (m == 0) return {};
  AlephNumber r = l;
  for (std::size_t i = 1; i < m; ++i) r = oplus(r, l);
  return r;
}

std::strong_ordering compare_aleph(const AlephNumber& l, const AlephNumber& m) {
  // leading coefficients of degree >= 1 are positive
  if (l.degree() != m.degree()) return l.degree() <=> m.degree();
  for (std::size_t k = l.coeffs().size(); k-- > 0;) {
    if (auto c = l.coeff(k) <=> m.coeff(k); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

OmegaNumber embed(const AlephNumber& l) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < l.coeffs().size(); ++k) terms.push_back({static_cast<Exponent>(k), l.coeff(k)});
  return OmegaNumber::make(std::move(terms));
}

AlephNumber integer_truncation(const OmegaNumber& x) {
  if (x.is_zero()) return {};
  OmegaNumber ax = abs(x);
  Rational constant = ax.coeff(0);
  std::vector<Rational> coeffs{Rational(constant.floor())};
  for (const Term& t : ax.terms()) {
    if (t.exponent <= 0) continue;
    auto k = static_cast<std::size_t>(t.exponent);
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = t.value;
  }
  if (constant.is_integer()) {
    auto tail = std::find_if(ax.terms().begin(), ax.terms().end(), [](const Term& t) { return t.exponent < 0; });
    if (tail != ax.terms().end()) {
      if (tail->value.sign() < 0) coeffs[0] -= Rational(1);
    } else if (!ax.is_exact()) {
      throw PrecisionError("precision exhausted: sign of the infinitesimal part of " + to_string(x) + " is unknown");
    }
  }
  return AlephNumber(std::move(coeffs));
}

AlephNumber archimedean_witness(const OmegaNumber& a, const OmegaNumber& b) {
  if (a.sign() <= 0) throw MathError("archimedean witness requires a > 0, got " + to_string(a));
  OmegaNumber magnitude = abs(b);
  if (magnitude.is_zero()) return {};
  auto depth = static_cast<std::size_t>(std::llabs(a.top()) + std::llabs(magnitude.top()) + 4);
  OmegaNumber ratio = divide(magnitude, a, depth);

  // Candidate from the known part of |b|/a; it overshoots by one only when the
  // constant is an integer and the infinitesimal tail is negative.
  std::vector<Rational> coeffs{Rational(ratio.coeff(0).floor())};
  for (const Term& t : ratio.terms()) {
    if (t.exponent <= 0) continue;
    auto k = static_cast<std::size_t>(t.exponent);
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = t.value;
  }
  AlephNumber l(std::move(coeffs));
  if (compare(mul(embed(l), a), magnitude) > 0) l = predecessor(l);
  if (compare(mul(embed(successor(l)), a), magnitude) <= 0) l = successor(l);
  return l;
}

std::string to_string(const AlephNumber& l) { return to_string(embed(l)); }

std::string to_string(const R1Point& x) { return to_string(x.to_omega()); }

std::ostream& operator<<(std::ostream& os, const AlephNumber& l) { return os << to_string(l); }

std::ostream& operator<<(std::ostream& os, const R1Point& x) { return os << to_string(x); }

}  // namespace omega
