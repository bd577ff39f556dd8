#include "series.hpp"

#include <algorithm>

#include "omega/errors.hpp"

namespace omega::detail {

Dense mul_trunc(const Dense& a, const Dense& b, std::size_t n) {
  if (a.empty() || b.empty()) return {};
  std::size_t len = std::min(n + 1, a.size() + b.size() - 1);
  Dense r(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Dense inverse_trunc(const Dense& c, std::size_t n) {
  if (c.empty() || c[0].is_zero()) throw MathError("division by zero");
  Dense s(n + 1);
  Rational inv0 = c[0].inverse();
  s[0] = inv0;
  for (std::size_t j = 1; j <= n; ++j) {
    Rational acc;
    for (std::size_t i = 1; i <= std::min(j, c.size() - 1); ++i) {
      if (!c[i].is_zero()) acc += c[i] * s[j - i];
    }
    s[j] = -acc * inv0;
  }
  return s;
}

Dense compose_trunc(const Dense& coeffs, const Dense& u, std::size_t n) {
  Dense acc{coeffs.empty() ? Rational(0) : coeffs.back()};
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    acc = mul_trunc(acc, u, n);
    if (acc.empty()) acc.emplace_back();
    acc[0] += coeffs[k - 1];
  }
  acc.resize(n + 1);
  return acc;
}

}  // namespace omega::detail
