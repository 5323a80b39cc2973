#include "qpi/phi.hpp"

#include "qpi/errors.hpp"
#include "qpi/qpochhammer.hpp"

namespace qpi {

HyperSeriesSpec to_hyper(const PhiSeriesSpec& spec, PhiMode mode) {
  const long r = static_cast<long>(spec.upper.size()) - 1;
  const long s = static_cast<long>(spec.lower.size());
  const long e = s - r;  // exponent of (-1)^k q^{C(k,2)}
  if (e < 0) throw DomainError("phi_series: more upper than lower parameters plus one; series diverges");
  if (spec.upper.empty()) throw DomainError("phi_series: at least one upper parameter required");

  HyperSeriesSpec h;
  h.q = spec.q;
  h.first_term = BigReal(1);
  h.ratio.scale = (e % 2 == 0) ? spec.z : -spec.z;
  h.ratio.q_step = static_cast<int>(e);
  for (const BigReal& a : spec.upper) h.ratio.numer.push_back({a, 1, 1});
  h.ratio.denom.push_back({spec.q, 1, 1});
  for (const BigReal& b : spec.lower) h.ratio.denom.push_back({b, 1, 1});

  if (spec.well_poised) {
    const BigReal& w = *spec.well_poised;
    const BigReal one_minus_w = BigReal(1) - w;
    if (one_minus_w.is_zero()) throw ZeroDenominatorError("phi_series: well-poised parameter equals 1");
    h.weights = {BigReal(1) / one_minus_w, BigReal(0), -w / one_minus_w};
  }

  if (mode == PhiMode::direct) {
    h.direct_head = [spec, e](long k) {
      const BigReal& q = spec.q;
      BigReal num(1);
      for (const BigReal& a : spec.upper) num *= qpoch_finite(a, q, k);
      BigReal den = qpoch_finite(q, q, k);
      for (const BigReal& b : spec.lower) den *= qpoch_finite(b, q, k);
      if (num.is_zero()) return BigReal(0);
      if (den.is_zero()) throw ZeroDenominatorError("phi_series: lower parameter reaches a pole");
      BigReal sign_q = pow(q, k * (k - 1) / 2 * e);
      if ((k * e) % 2 != 0) sign_q = -sign_q;
      return num / den * sign_q * pow(spec.z, k);
    };
  }
  return h;
}

SeriesResult phi_series(const PhiSeriesSpec& spec, const SumControl& control, PhiMode mode) {
  return sum_hyper(to_hyper(spec, mode), control);
}

SeriesResult phi_series(const PhiSeriesSpec& spec, int digits, PhiMode mode) {
  SumControl control;
  control.digits = digits;
  return phi_series(spec, control, mode);
}

}  // namespace qpi
