#include "decimal.hpp"

#include <mpfr.h>

#include "omega/errors.hpp"

namespace omega::detail {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

mpfr_prec_t bits_for(unsigned digits) {
  // log2(10) < 3.33; 64 guard bits absorb the function's own error
  return static_cast<mpfr_prec_t>(digits) * 333 / 100 + 64;
}

Rational to_rational(MpfrValue& v, unsigned digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpfr_mul_z(v.get(), v.get(), scale.get_mpz_t(), MPFR_RNDN);
  mpz_class rounded;
  mpfr_get_z(rounded.get_mpz_t(), v.get(), MPFR_RNDN);
  return Rational(Integer(rounded), Integer(scale));
}

}  // namespace

Rational round_decimal(Transcendental fn, const Rational& t, unsigned digits) {
  mpfr_prec_t bits = bits_for(digits);
  MpfrValue x(bits);
  MpfrValue y(bits);
  mpfr_set_q(x.get(), t.raw().get_mpq_t(), MPFR_RNDN);
  switch (fn) {
    case Transcendental::kExp:
      mpfr_exp(y.get(), x.get(), MPFR_RNDN);
      break;
    case Transcendental::kSin:
      mpfr_sin(y.get(), x.get(), MPFR_RNDN);
      break;
    case Transcendental::kCos:
      mpfr_cos(y.get(), x.get(), MPFR_RNDN);
      break;
    case Transcendental::kLog:
      if (t.sign() <= 0) throw MathError("domain violation: log of non-positive value " + t.to_string());
      mpfr_log(y.get(), x.get(), MPFR_RNDN);
      break;
  }
  return to_rational(y, digits);
}

Rational round_power(const Rational& t, const Rational& alpha, unsigned digits) {
  if (t.sign() <= 0) throw MathError("domain violation: real power of non-positive value " + t.to_string());
  mpfr_prec_t bits = bits_for(digits);
  MpfrValue x(bits);
  MpfrValue a(bits);
  MpfrValue y(bits);
  mpfr_set_q(x.get(), t.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(a.get(), alpha.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_pow(y.get(), x.get(), a.get(), MPFR_RNDN);
  return to_rational(y, digits);
}

}  // namespace omega::detail
