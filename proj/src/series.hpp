#pragma once

// Dense truncated power series in o. Index j holds the coefficient of o^j.
// Shared by the inversion, power and lifting kernels.

#include <cstddef>
#include <vector>

#include "omega/exact_numeric.hpp"

namespace omega::detail {

using Dense = std::vector<Rational>;

/// a * b keeping powers o^0 .. o^n.
Dense mul_trunc(const Dense& a, const Dense& b, std::size_t n);

/// 1 / c keeping powers o^0 .. o^n; requires c[0] != 0.
Dense inverse_trunc(const Dense& c, std::size_t n);

/// sum_{k=0}^{n} coeffs[k] u^k keeping powers o^0 .. o^n, by Horner's rule.
/// u must have u[0] == 0 for the truncation to be exact.
Dense compose_trunc(const Dense& coeffs, const Dense& u, std::size_t n);

}  // namespace omega::detail
