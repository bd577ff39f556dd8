#include "omega/omega_number.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "omega/errors.hpp"
#include "series.hpp"

namespace omega {

namespace {

constexpr Exponent kUnbounded = std::numeric_limits<Exponent>::max();

Exponent as_exponent(std::size_t n) { return static_cast<Exponent>(n); }

std::optional<Exponent> max_floor(std::optional<Exponent> a, std::optional<Exponent> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

// Relative coefficients c_j = a_{N-j} / a_N for j = 0..n, so that
// x = a_N S^N (c_0 + c_1 o + c_2 o^2 + ...), c_0 = 1.
detail::Dense relative_coefficients(const OmegaNumber& x, std::size_t n) {
  Exponent top = x.top();
  const Rational& lead = x.leading_coefficient();
  detail::Dense c(n + 1);
  for (const Term& t : x.terms()) {
    Exponent j = top - t.exponent;
    if (j > as_exponent(n)) break;
    c[static_cast<std::size_t>(j)] = t.value / lead;
  }
  return c;
}

// Number of relative orders of x that are known: N - floor, or unbounded.
Exponent relative_precision(const OmegaNumber& x) {
  return x.is_exact() ? kUnbounded : x.top() - *x.floor();
}

// Builds a_lead S^top * sum_j s_j o^j with floor top - (s.size() - 1).
OmegaNumber from_relative(const Rational& lead, Exponent top, const detail::Dense& s) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!s[j].is_zero()) terms.push_back({top - as_exponent(j), lead * s[j]});
  }
  return OmegaNumber::make(std::move(terms), top - as_exponent(s.size()) + 1);
}

std::string symbol(Exponent e) {
  if (e == 0) return {};
  if (e == 1) return "S";
  if (e == -1) return "o";
  if (e > 0) return "S^" + std::to_string(e);
  return "o^" + std::to_string(-e);
}

std::vector<Rational> trimmed(std::span<const Rational> p) {
  std::vector<Rational> r(p.begin(), p.end());
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

// Quotient of p by q when q divides p exactly; polynomials in increasing degree.
std::optional<std::vector<Rational>> exact_polynomial_division(std::vector<Rational> p,
                                                               const std::vector<Rational>& q) {
  if (p.empty()) return std::vector<Rational>{};
  if (p.size() < q.size()) return std::nullopt;
  std::vector<Rational> quotient(p.size() - q.size() + 1);
  for (std::size_t k = quotient.size(); k-- > 0;) {
    Rational c = p[k + q.size() - 1] / q.back();
    quotient[k] = c;
    for (std::size_t i = 0; i < q.size(); ++i) p[k + i] -= c * q[i];
  }
  for (const Rational& r : p) {
    if (!r.is_zero()) return std::nullopt;
  }
  return quotient;
}

}  // namespace

OmegaNumber OmegaNumber::make(std::vector<Term> entries, std::optional<Exponent> floor) {
  std::sort(entries.begin(), entries.end(),
            [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].exponent == entries[i - 1].exponent) {
      throw MathError("duplicate exponent " + std::to_string(entries[i].exponent));
    }
  }
  std::vector<Term> terms;
  terms.reserve(entries.size());
  for (Term& t : entries) {
    if (floor && t.exponent < *floor) {
      throw MathError("coefficient at exponent " + std::to_string(t.exponent) + " lies below floor " +
                      std::to_string(*floor));
    }
    if (!t.value.is_zero()) terms.push_back(std::move(t));
  }
  return OmegaNumber(std::move(terms), floor);
}

OmegaNumber OmegaNumber::constant(const Rational& value) { return monomial(value, 0); }

OmegaNumber OmegaNumber::monomial(const Rational& c, Exponent e) {
  if (c.is_zero()) return {};
  return OmegaNumber({{e, c}}, std::nullopt);
}

Exponent OmegaNumber::top() const {
  if (is_zero()) throw MathError("zero has no leading exponent");
  if (terms_.empty()) throw PrecisionError("precision exhausted: no known nonzero coefficient");
  return terms_.front().exponent;
}

const Rational& OmegaNumber::leading_coefficient() const {
  static_cast<void>(top());  // throws on zero or no known term
  return terms_.front().value;
}

Rational OmegaNumber::coeff(Exponent e) const {
  if (floor_ && e < *floor_) {
    throw PrecisionError("coefficient of exponent " + std::to_string(e) + " is below the floor " +
                         std::to_string(*floor_));
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent v) { return t.exponent > v; });
  if (it != terms_.end() && it->exponent == e) return it->value;
  return Rational(0);
}

int OmegaNumber::sign() const {
  if (is_zero()) return 0;
  return leading_coefficient().sign();
}

bool OmegaNumber::in_series_algebra() const {
  if (is_zero()) return true;
  if (!terms_.empty()) return terms_.front().exponent <= 0;
  if (*floor_ <= 1) return true;
  throw PrecisionError("precision exhausted: cannot tell whether the value is finite");
}

bool OmegaNumber::is_infinitesimal() const {
  if (is_zero()) return true;
  if (!terms_.empty()) return terms_.front().exponent <= -1;
  if (*floor_ <= 0) return true;
  throw PrecisionError("precision exhausted: cannot tell whether the value is infinitesimal");
}

bool OmegaNumber::is_standard() const {
  return is_exact() && (terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0));
}

OmegaNumber add(const OmegaNumber& x, const OmegaNumber& y) {
  std::optional<Exponent> floor = max_floor(x.floor_, y.floor_);
  std::vector<Term> out;
  out.reserve(x.terms_.size() + y.terms_.size());
  auto i = x.terms_.begin();
  auto j = y.terms_.begin();
  auto push = [&](Exponent e, Rational v) {
    if (floor && e < *floor) return;
    if (!v.is_zero()) out.push_back({e, std::move(v)});
  };
  while (i != x.terms_.end() || j != y.terms_.end()) {
    if (j == y.terms_.end() || (i != x.terms_.end() && i->exponent > j->exponent)) {
      push(i->exponent, i->value);
      ++i;
    } else if (i == x.terms_.end() || j->exponent > i->exponent) {
      push(j->exponent, j->value);
      ++j;
    } else {
      push(i->exponent, i->value + j->value);
      ++i;
      ++j;
    }
  }
  return OmegaNumber(std::move(out), floor);
}

OmegaNumber neg(const OmegaNumber& x) {
  OmegaNumber r = x;
  for (Term& t : r.terms_) t.value = -t.value;
  return r;
}

OmegaNumber sub(const OmegaNumber& x, const OmegaNumber& y) { return add(x, neg(y)); }

OmegaNumber mul(const OmegaNumber& x, const OmegaNumber& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.vanishes_to_precision() || y.vanishes_to_precision()) {
    throw PrecisionError("precision exhausted: product of a value with no known nonzero coefficient");
  }
  std::optional<Exponent> floor;
  if (x.floor_ && y.floor_) {
    floor = std::max(*x.floor_ + y.top(), *y.floor_ + x.top());
  } else if (x.floor_) {
    floor = *x.floor_ + y.top();
  } else if (y.floor_) {
    floor = *y.floor_ + x.top();
  }
  std::map<Exponent, Rational, std::greater<>> acc;
  for (const Term& a : x.terms_) {
    for (const Term& b : y.terms_) {
      Exponent e = a.exponent + b.exponent;
      if (floor && e < *floor) break;  // y's terms are decreasing
      acc[e] += a.value * b.value;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, v] : acc) {
    if (!v.is_zero()) out.push_back({e, std::move(v)});
  }
  return OmegaNumber(std::move(out), floor);
}

OmegaNumber abs(const OmegaNumber& x) { return x.sign() < 0 ? neg(x) : x; }

OmegaNumber scale(const OmegaNumber& x, const Rational& c) { return mul(x, OmegaNumber::constant(c)); }

std::strong_ordering compare(const OmegaNumber& x, const OmegaNumber& y) {
  std::optional<Exponent> limit = max_floor(x.floor(), y.floor());
  const auto& a = x.terms();
  const auto& b = y.terms();
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    Exponent e;
    Rational ca, cb;
    if (j == b.end() || (i != a.end() && i->exponent > j->exponent)) {
      e = i->exponent;
      ca = i->value;
      ++i;
    } else if (i == a.end() || j->exponent > i->exponent) {
      e = j->exponent;
      cb = j->value;
      ++j;
    } else {
      e = i->exponent;
      ca = i->value;
      cb = j->value;
      ++i;
      ++j;
    }
    if (limit && e < *limit) break;
    if (ca != cb) return ca <=> cb;
  }
  if (x.is_exact() && y.is_exact()) return std::strong_ordering::equal;
  throw PrecisionError("precision exhausted: values are indistinguishable at the available precision");
}

Exponent ord_o(const OmegaNumber& x) {
  if (x.is_zero()) throw MathError("ord of zero is undefined");
  if (!x.in_series_algebra()) throw MathError("ord_o requires an element of R_o, got " + to_string(x));
  return -x.top();
}

Rational standard_part(const OmegaNumber& x) {
  if (!x.in_series_algebra()) throw MathError("infinite value has no standard part: " + to_string(x));
  return x.coeff(0);
}

OmegaNumber infinitesimal_part(const OmegaNumber& x) {
  return sub(x, OmegaNumber::constant(standard_part(x)));
}

OmegaNumber moment(const OmegaNumber& x, std::size_t k) {
  if (!x.in_series_algebra()) throw MathError("moments are defined on R_o only, got " + to_string(x));
  return OmegaNumber::monomial(x.coeff(-as_exponent(k)), -as_exponent(k));
}

bool vanishes_above(const OmegaNumber& x, Exponent e) {
  if (x.has_leading_term() && x.top() > e) return false;
  if (x.floor() && *x.floor() > e + 1) {
    throw PrecisionError("precision exhausted: coefficients above exponent " + std::to_string(e) +
                         " are not all known");
  }
  return true;
}

OmegaNumber truncate(const OmegaNumber& x, std::size_t n) {
  Exponent cut = -as_exponent(n);
  if (x.floor() && *x.floor() > cut) {
    throw PrecisionError("cannot truncate at o^" + std::to_string(n) + ": value known only down to exponent " +
                         std::to_string(*x.floor()));
  }
  std::vector<Term> kept;
  for (const Term& t : x.terms()) {
    if (t.exponent < cut) break;
    kept.push_back(t);
  }
  return OmegaNumber::make(std::move(kept));
}

OmegaNumber invert(const OmegaNumber& x, std::size_t depth) {
  if (x.is_zero()) throw MathError("division by zero");
  Exponent top = x.top();
  const Rational& lead = x.leading_coefficient();
  if (x.is_exact() && x.terms().size() == 1) return OmegaNumber::monomial(lead.inverse(), -top);
  // result exponents are -top - j; keep j <= depth - top and j within x's precision
  Exponent r = std::max<Exponent>(0, std::min(relative_precision(x), as_exponent(depth) - top));
  auto n = static_cast<std::size_t>(r);
  detail::Dense s = detail::inverse_trunc(relative_coefficients(x, n), n);
  return from_relative(lead.inverse(), -top, s);
}

OmegaNumber divide(const OmegaNumber& x, const OmegaNumber& y, std::size_t depth) {
  return mul(x, invert(y, depth));
}

OmegaNumber pow_alpha(const OmegaNumber& x, const Rational& alpha, std::size_t depth) {
  if (alpha.is_integer()) {
    long n = alpha.numerator().to_long();
    if (n < 0) return invert(pow_alpha(x, Rational(-n), depth), depth);
    OmegaNumber result = OmegaNumber::constant(Rational(1));
    OmegaNumber base = x;
    for (unsigned long e = static_cast<unsigned long>(n); e != 0; e >>= 1) {
      if (e & 1U) result = mul(result, base);
      if (e > 1) base = mul(base, base);
    }
    return result;
  }
  if (x.is_zero()) {
    if (alpha.sign() < 0) throw MathError("division by zero");
    return {};
  }
  Exponent top = x.top();
  Rational leading_exponent = alpha * Rational(top);
  if (!leading_exponent.is_integer()) {
    throw MathError("fractional leading exponent: (S^" + std::to_string(top) + ")^" + alpha.to_string() +
                    " is not a power of S");
  }
  const Rational& lead = x.leading_coefficient();
  if (lead.sign() < 0) throw MathError("negative base " + lead.to_string() + " for exponent " + alpha.to_string());
  std::optional<Rational> root = exact_power(lead, alpha);
  if (!root) {
    throw MathError("irrational leading coefficient: " + lead.to_string() + "^" + alpha.to_string() +
                    " is not rational");
  }
  Exponent new_top = leading_exponent.numerator().to_long();
  if (x.is_exact() && x.terms().size() == 1) return OmegaNumber::make({{new_top, *root}});
  Exponent r = std::max<Exponent>(0, std::min(relative_precision(x), as_exponent(depth) + new_top));
  auto n = static_cast<std::size_t>(r);
  detail::Dense u = relative_coefficients(x, n);
  u[0] = Rational(0);
  detail::Dense binomials(n + 1);
  for (std::size_t k = 0; k <= n; ++k) binomials[k] = binomial_general(alpha, k);
  return from_relative(*root, new_top, detail::compose_trunc(binomials, u, n));
}

OmegaNumber expand_rational(std::span<const Rational> p, std::span<const Rational> q, std::size_t depth) {
  std::vector<Rational> num = trimmed(p);
  std::vector<Rational> den = trimmed(q);
  if (den.empty()) throw MathError("division by zero");
  if (num.empty()) return {};
  std::size_t k = 0;
  while (den[k].is_zero()) ++k;
  std::vector<Rational> unit_den(den.begin() + static_cast<std::ptrdiff_t>(k), den.end());
  auto exponent_of = [k](std::size_t j) { return as_exponent(k) - as_exponent(j); };

  if (auto quotient = exact_polynomial_division(num, unit_den)) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < quotient->size(); ++j) terms.push_back({exponent_of(j), (*quotient)[j]});
    return OmegaNumber::make(std::move(terms));
  }
  std::size_t n = depth + k;
  detail::Dense s = detail::mul_trunc(num, detail::inverse_trunc(unit_den, n), n);
  std::vector<Term> terms;
  for (std::size_t j = 0; j < s.size(); ++j) terms.push_back({exponent_of(j), s[j]});
  return OmegaNumber::make(std::move(terms), -as_exponent(depth));
}

OmegaNumber cauchy_limit(const Sequence& seq, std::size_t window, std::size_t max_index, std::size_t depth) {
  if (window == 0) throw MathError("cauchy_limit: window must be at least 1");
  std::vector<std::optional<OmegaNumber>> cache;
  auto at = [&](std::size_t n) -> const OmegaNumber& {
    if (cache.size() <= n) cache.resize(n + 1);
    if (!cache[n]) cache[n] = seq(n);
    return *cache[n];
  };

  std::size_t start = 0;
  for (std::size_t j = 0; j <= depth; ++j) {
    std::size_t n = start;
    while (true) {
      if (n + window > max_index) {
        throw NotCauchyError("sequence is not Cauchy* within budget: moment " + std::to_string(j) +
                             " did not stabilize by index " + std::to_string(max_index));
      }
      OmegaNumber head = truncate(at(n), j);
      std::size_t mismatch = 0;
      for (std::size_t i = 1; i <= window; ++i) {
        if (truncate(at(n + i), j) != head) {
          mismatch = i;
          break;
        }
      }
      if (mismatch == 0) break;
      n += mismatch;
    }
    start = n;
  }
  OmegaNumber limit = truncate(at(start), depth);
  return OmegaNumber::make(limit.terms(), -as_exponent(depth));
}

std::string to_string(const OmegaNumber& x) {
  std::ostringstream os;
  if (!x.has_leading_term()) {
    os << "0";
  } else {
    bool first = true;
    for (const Term& t : x.terms()) {
      bool negative = t.value.sign() < 0;
      Rational magnitude = t.value.abs();
      std::string sym = symbol(t.exponent);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      if (sym.empty()) {
        os << magnitude;
      } else if (magnitude == Rational(1)) {
        os << sym;
      } else {
        os << magnitude << "*" << sym;
      }
      first = false;
    }
  }
  if (x.floor()) os << " [floor=" << *x.floor() << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const OmegaNumber& x) { return os << to_string(x); }

}  // namespace omega
