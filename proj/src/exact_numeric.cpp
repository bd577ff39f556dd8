#include "omega/exact_numeric.hpp"

#include <cctype>
#include <vector>

#include "omega/errors.hpp"

namespace omega {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Exact k-th root of a non-negative integer, if one exists.
std::optional<mpz_class> exact_root(const mpz_class& value, unsigned long k) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!is_digits(body)) throw ParseError("invalid integer literal '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

long Integer::to_long() const {
  if (!fits_long()) throw MathError("integer " + to_string() + " does not fit a machine word");
  return value_.get_si();
}

Integer& Integer::operator+=(const Integer& rhs) {
  value_ += rhs.value_;
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) throw MathError("division by zero");
  value_ = mpq_class(numerator.raw(), denominator.raw());
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Integer num = Integer::parse(text.substr(0, slash));
    std::string_view den = text.substr(slash + 1);
    if (!is_digits(den)) throw ParseError("invalid rational literal '" + std::string(text) + "'");
    return Rational(num, Integer::parse(den));
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !is_digits(int_part)) || (!frac.empty() && !is_digits(frac)) ||
        (int_part.empty() && frac.empty())) {
      throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(Integer(mpz_class(digits.empty() ? "0" : digits, 10)), Integer(scale));
    return negative ? -r : r;
  }
  return Rational(Integer::parse(text));
}

Integer Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Integer(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw MathError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational pow(const Rational& x, long n) {
  if (n < 0) return pow(x.inverse(), -n);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(n));
  return Rational(Integer(num), Integer(den));
}

std::optional<Rational> exact_power(const Rational& base, const Rational& exponent) {
  if (exponent.is_integer()) return pow(base, exponent.numerator().to_long());
  if (base.is_zero()) {
    if (exponent.sign() < 0) throw MathError("division by zero");
    return Rational(0);
  }
  long p = exponent.numerator().to_long();
  unsigned long q = static_cast<unsigned long>(exponent.denominator().to_long());
  bool negative = base.sign() < 0;
  if (negative && q % 2 == 0) return std::nullopt;
  mpz_class num = ::abs(base.raw().get_num());
  auto num_root = exact_root(num, q);
  auto den_root = exact_root(base.raw().get_den(), q);
  if (!num_root || !den_root) return std::nullopt;
  Rational root(Integer(negative ? mpz_class(-*num_root) : *num_root), Integer(*den_root));
  return pow(root, p);
}

Integer factorial(std::size_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Integer(r);
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return Integer(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Integer(r);
}

Rational falling_factorial(const Rational& alpha, std::size_t k) {
  Rational r(1);
  for (std::size_t i = 0; i < k; ++i) r *= alpha - Rational(static_cast<long>(i));
  return r;
}

Rational binomial_general(const Rational& alpha, std::size_t k) {
  return falling_factorial(alpha, k) / Rational(factorial(k));
}

Rational bernoulli(std::size_t m) {
  // sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1
  std::vector<Rational> b(m + 1);
  b[0] = Rational(1);
  for (std::size_t j = 1; j <= m; ++j) {
    Rational acc;
    for (std::size_t k = 0; k < j; ++k) acc += Rational(binomial(j + 1, k)) * b[k];
    b[j] = -acc / Rational(static_cast<long>(j + 1));
  }
  return b[m];
}

Integer x_coeff(std::size_t p, std::size_t n) {
  Integer sum;
  for (std::size_t k = 0; k <= p; ++k) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, n);  // 0^0 = 1
    Integer term = binomial(p, k) * Integer(power);
    if ((p - k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Integer k_coeff(std::size_t m, std::size_t j) {
  if (j > m) throw MathError("k_coeff: j = " + std::to_string(j) + " exceeds m = " + std::to_string(m));
  std::vector<Integer> e(j + 1);
  e[0] = Integer(1);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t r = std::min(i, j); r >= 1; --r) e[r] += Integer(static_cast<long>(i)) * e[r - 1];
  }
  return e[j];
}

Integer stirling2(std::size_t n, std::size_t p) {
  std::vector<Integer> row(p + 1);
  row[0] = Integer(1);  // S(0, 0)
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, p); j >= 1; --j) {
      row[j] = Integer(static_cast<long>(j)) * row[j] + row[j - 1];
    }
    row[0] = Integer(0);
  }
  return row[p];
}

Integer stirling1_unsigned(std::size_t p, std::size_t n) {
  std::vector<Integer> row(n + 1);
  row[0] = Integer(1);  // c(0, 0)
  for (std::size_t i = 1; i <= p; ++i) {
    for (std::size_t j = std::min(i, n); j >= 1; --j) {
      row[j] = Integer(static_cast<long>(i - 1)) * row[j] + row[j - 1];
    }
    row[0] = Integer(0);
  }
  return row[n];
}

}  // namespace omega
