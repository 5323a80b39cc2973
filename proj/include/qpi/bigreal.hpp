#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "qpi/rational.hpp"

namespace qpi {

/// Arbitrary-precision real backed by MPFR, rounded to nearest.
///
/// Precision is carried per value in decimal digits (never below kMinDigits).
/// A binary operation produces a result at the larger of the two operand
/// precisions, so exact small constants (BigReal(1), BigReal(-2)) can be mixed
/// freely with working values without degrading them. There is no global
/// default precision.
class BigReal {
 public:
  static constexpr int kMinDigits = 20;

  BigReal();
  BigReal(long value);  // NOLINT(google-explicit-constructor): exact small integers
  BigReal(const Rational& value, int digits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal literal at the given precision.
  static BigReal parse(std::string_view text, int digits);
  static BigReal pi(int digits);
  static BigReal infinity();
  /// 10^exponent rounded to `digits`.
  static BigReal pow10(long exponent, int digits);

  [[nodiscard]] int digits() const { return digits_; }
  /// Same value re-rounded to another precision.
  [[nodiscard]] BigReal with_digits(int digits) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  BigReal operator-() const;

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal base-10 exponent estimate (floor(log10|x|)), or a very negative number for 0.
  [[nodiscard]] long log10_floor() const;

  /// Scientific notation with `significant` digits, e.g. "1.2500000e-03".
  [[nodiscard]] std::string to_string(int significant) const;
  /// Scientific notation at the value's own precision.
  [[nodiscard]] std::string str() const { return to_string(digits_); }

  friend BigReal abs(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal pow(const BigReal& x, long exponent);
  friend BigReal exp(const BigReal& x);
  friend BigReal log(const BigReal& x);
  friend BigReal sin(const BigReal& x);
  friend BigReal gamma(const BigReal& x);
  friend const BigReal& max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
  friend const BigReal& min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

  [[nodiscard]] mpfr_srcptr raw() const { return v_; }

 private:
  explicit BigReal(int digits, int /*tag*/);
  void raise_to(int digits);

  mpfr_t v_;
  int digits_;
};

/// Bits of mantissa used for a given number of decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// Rounds `r` to `digits` decimal digits. Requires digits >= BigReal::kMinDigits.
BigReal to_bigreal(const Rational& r, int digits);

}  // namespace qpi
