#include "records.hpp"

namespace qpi::catalog {

void require_unit_interval(const ParamPoint& point, const std::string& name, bool allow_zero) {
  const Rational& v = point.at(name);
  const bool lower_ok = allow_zero ? v.sign() >= 0 : v.sign() > 0;
  if (!(lower_ok && v < Rational(1)))
    throw DomainError(name + (allow_zero ? " must lie in [0,1), got " : " must lie in (0,1), got ") + v.str());
}

void require_nonzero(const Rational& value, const std::string& what) {
  if (value.is_zero()) throw DomainError(what + " vanishes");
}

void require_no_pole(const Rational& x, const Rational& base, const std::string& what) {
  // x base^k decreases towards 0 for x > 0, so the scan ends once it drops below 1.
  if (x.sign() <= 0) return;
  Rational y = x;
  for (int k = 0; k < 100000 && !(y < Rational(1)); ++k) {
    if (y == Rational(1)) throw DomainError(what + " has a vanishing factor (pole)");
    y *= base;
  }
}

SeriesResult sum(const HyperSeriesSpec& spec, int digits) {
  SumControl control;
  control.digits = digits;
  return sum_hyper(spec, control);
}

SeriesResult products(const std::vector<PowFactor>& factors, const BigReal& q, int digits) {
  return qpoch_power_product(factors, q, digits);
}

std::vector<BigReal> well_poised_weights(const BigReal& c, int n) {
  const BigReal one_minus_c = BigReal(1) - c;
  if (one_minus_c.is_zero()) throw ZeroDenominatorError("well-poised factor with parameter 1");
  std::vector<BigReal> w(static_cast<std::size_t>(n) + 1, BigReal(0));
  w.front() = BigReal(1) / one_minus_c;
  w.back() = -c / one_minus_c;
  if (n == 0) w.front() = BigReal(1);
  return w;
}

}  // namespace qpi::catalog
