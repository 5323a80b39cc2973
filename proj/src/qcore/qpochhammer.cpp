#include "qpi/qpochhammer.hpp"

namespace qpi {

SeriesResult qpoch_infinite(const BigReal& x, const BigReal& q, int digits) {
  if (!(q.sign() > 0 && q < BigReal(1))) throw DomainError("qpoch_infinite: q must lie in (0,1)");
  if (!x.is_finite()) throw DomainError("qpoch_infinite: non-finite argument");
  if (x.is_zero()) return SeriesResult::exact(BigReal(1));

  const BigReal one(1);
  const BigReal eps_target = BigReal::pow10(-digits, digits);
  const BigReal one_minus_q = one - q;
  const BigReal ax = abs(x);

  BigReal product = one.with_digits(std::max(digits, x.digits()));
  BigReal term = x;   // x q^i
  BigReal aterm = ax; // |x| q^i
  std::size_t i = 0;
  // Stop at the least I with |x| q^I / (1-q) below the target; beyond that
  // point every omitted factor lies in (1/2, 3/2).
  while (!(aterm / one_minus_q < eps_target)) {
    product *= one - term;
    term *= q;
    aterm *= q;
    ++i;
  }
  // |log prod_{i>=I}(1 - x q^i)| <= sum |x|q^i/(1-|x|q^i) <= eps with
  // eps = |x|q^I / ((1-q)(1-|x|q^I)); then |e^t - 1| <= 2|t| for |t| <= 1.
  const BigReal eps = aterm / (one_minus_q * (one - aterm));
  BigReal err = BigReal(2) * abs(product) * eps;
  return {std::move(product), i, ErrorBound{std::move(err), BoundKind::truncation}};
}

SeriesResult qpoch_multi_infinite(std::span<const BigReal> xs, const BigReal& q, int digits) {
  SeriesResult result = SeriesResult::exact(BigReal(1));
  for (const BigReal& x : xs) result *= qpoch_infinite(x, q, digits);
  return result;
}

SeriesResult qpoch_power_product(std::span<const PowFactor> factors, const BigReal& q, int digits) {
  SeriesResult numer = SeriesResult::exact(BigReal(1));
  SeriesResult denom = SeriesResult::exact(BigReal(1));
  for (const PowFactor& f : factors) {
    if (f.step <= 0) throw DomainError("qpoch_power_product: base exponent must be positive");
    const SeriesResult p = qpoch_infinite(f.x, pow(q, f.step), digits);
    if (f.power >= 0) {
      numer *= pow(p, f.power);
    } else {
      if (p.value.is_zero()) throw ZeroDenominatorError("qpoch_power_product: vanishing infinite product in denominator");
      denom *= pow(p, -f.power);
    }
  }
  return numer / denom;
}

}  // namespace qpi
