#pragma once

// Fixed-precision evaluation of transcendental values, rounded to a given
// number of decimal digits and returned as exact rationals.

#include "omega/exact_numeric.hpp"

namespace omega::detail {

enum class Transcendental { kExp, kSin, kCos, kLog };

Rational round_decimal(Transcendental fn, const Rational& t, unsigned digits);

/// t^alpha for t > 0, rounded.
Rational round_power(const Rational& t, const Rational& alpha, unsigned digits);

}  // namespace omega::detail
