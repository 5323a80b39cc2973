#include "qpi/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpi/errors.hpp"

namespace qpi {

mpfr_prec_t bits_for_digits(int digits) {
  // log2(10) = 3.3219...; a few spare bits keep the last requested digit honest.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

BigReal::BigReal(int digits, int /*tag*/) : digits_(std::max(digits, kMinDigits)) {
  mpfr_init2(v_, bits_for_digits(digits_));
}

BigReal::BigReal() : BigReal(kMinDigits, 0) { mpfr_set_zero(v_, 1); }

BigReal::BigReal(long value) : BigReal(kMinDigits, 0) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigReal::BigReal(const Rational& value, int digits) : BigReal(digits, 0) {
  mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : BigReal(other.digits_, 0) { mpfr_set(v_, other.v_, MPFR_RNDN); }

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
  other.digits_ = kMinDigits;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    if (digits_ != other.digits_) {
      mpfr_set_prec(v_, bits_for_digits(other.digits_));
      digits_ = other.digits_;
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::parse(std::string_view text, int digits) {
  BigReal r(digits, 0);
  std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("BigReal::parse: malformed number '" + s + "'");
  return r;
}

BigReal BigReal::pi(int digits) {
  BigReal r(digits, 0);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::infinity() {
  BigReal r;
  mpfr_set_inf(r.v_, 1);
  return r;
}

BigReal BigReal::pow10(long exponent, int digits) {
  BigReal r(digits, 0);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

BigReal BigReal::with_digits(int digits) const {
  BigReal r(digits, 0);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

void BigReal::raise_to(int digits) {
  if (digits > digits_) {
    mpfr_prec_round(v_, bits_for_digits(digits), MPFR_RNDN);
    digits_ = digits;
  }
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  raise_to(rhs.digits_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  raise_to(rhs.digits_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  raise_to(rhs.digits_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw ZeroDenominatorError("BigReal: division by zero");
  raise_to(rhs.digits_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.digits_, b.digits_), 0);
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.digits_, b.digits_), 0);
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.digits_, b.digits_), 0);
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) throw ZeroDenominatorError("BigReal: division by zero");
  BigReal r(std::max(a.digits_, b.digits_), 0);
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(digits_, 0);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

long BigReal::log10_floor() const {
  if (is_zero()) return -1000000000L;
  if (!is_finite()) return 1000000000L;
  BigReal t(kMinDigits, 0);
  mpfr_abs(t.v_, v_, MPFR_RNDN);
  mpfr_log10(t.v_, t.v_, MPFR_RNDD);
  return static_cast<long>(std::floor(mpfr_get_d(t.v_, MPFR_RNDD)));
}

std::string BigReal::to_string(int significant) const {
  significant = std::max(significant, 1);
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", significant - 1, v_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

BigReal abs(const BigReal& x) {
  BigReal r(x.digits_, 0);
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative BigReal");
  BigReal r(x.digits_, 0);
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long exponent) {
  if (exponent < 0 && x.is_zero()) throw ZeroDenominatorError("BigReal pow: zero to a negative power");
  BigReal r(x.digits_, 0);
  mpfr_pow_si(r.v_, x.v_, exponent, MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x.digits_, 0);
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive BigReal");
  BigReal r(x.digits_, 0);
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& x) {
  BigReal r(x.digits_, 0);
  mpfr_sin(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal gamma(const BigReal& x) {
  BigReal r(x.digits_, 0);
  mpfr_gamma(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal to_bigreal(const Rational& r, int digits) {
  if (digits < BigReal::kMinDigits)
    throw DomainError("to_bigreal: precision below " + std::to_string(BigReal::kMinDigits) + " digits");
  return BigReal(r, digits);
}

}  // namespace qpi
