#include "qpi/series.hpp"

#include "qpi/errors.hpp"

namespace qpi {

namespace {

struct FactorState {
  BigReal current;  // coeff * q^(step*k)
  BigReal advance;  // q^step
  int power;
};

std::vector<FactorState> start(const std::vector<QFactor>& factors, const BigReal& q) {
  std::vector<FactorState> out;
  out.reserve(factors.size());
  for (const QFactor& f : factors) {
    if (f.step < 0 || f.power < 1) throw DomainError("term ratio: factor needs step >= 0 and power >= 1");
    out.push_back({f.coeff, pow(q, f.step), f.power});
  }
  return out;
}

BigReal product(const std::vector<FactorState>& factors) {
  BigReal p(1);
  for (const FactorState& f : factors) p *= pow(BigReal(1) - f.current, f.power);
  return p;
}

void step_all(std::vector<FactorState>& factors) {
  for (FactorState& f : factors) f.current *= f.advance;
}

// sum_{k>=n} |H_k| |sum_j w_j q^{jk}|, given H_n and the current w_j q^{jn}.
BigReal tail_bound(const HyperSeriesSpec& spec, const BigReal& head, const std::vector<BigReal>& weighted, long n) {
  const BigReal majorant = ratio_majorant(spec.ratio, spec.q, n);
  if (!majorant.is_finite()) return BigReal::infinity();
  const BigReal one(1);
  if (weighted.empty()) {
    if (!(majorant < one)) return BigReal::infinity();
    return abs(head) / (one - majorant);
  }
  BigReal total(0);
  BigReal qj(1);
  for (const BigReal& wq : weighted) {
    if (!wq.is_zero()) {
      const BigReal m = majorant * qj;
      if (!(m < one)) return BigReal::infinity();
      total += abs(wq) / (one - m);
    }
    qj *= spec.q;
  }
  return abs(head) * total;
}

}  // namespace

BigReal ratio_majorant(const TermRatio& ratio, const BigReal& q, long K) {
  if (q.sign() < 0 || !(q < BigReal(1))) return BigReal::infinity();
  if (ratio.q_step < 0) return BigReal::infinity();
  const BigReal one(1);
  BigReal bound = abs(ratio.scale) * pow(q, static_cast<long>(ratio.q_step) * K);
  for (const QFactor& f : ratio.numer) {
    if (f.step == 0) {
      bound *= pow(abs(one - f.coeff), f.power);
      continue;
    }
    const BigReal x = abs(f.coeff) * pow(q, static_cast<long>(f.step) * K);
    // For y between 0 and x: 0 <= y gives |1-y| <= max(1,|1-x|); y <= 0 gives 1+|y|.
    bound *= pow(f.coeff.sign() >= 0 ? max(one, abs(one - x)) : one + x, f.power);
  }
  for (const QFactor& f : ratio.denom) {
    if (f.step == 0) {
      const BigReal d = abs(one - f.coeff);
      if (d.is_zero()) return BigReal::infinity();
      bound /= pow(d, f.power);
      continue;
    }
    if (f.coeff.sign() <= 0) continue;  // 1 + |y| >= 1
    const BigReal x = f.coeff * pow(q, static_cast<long>(f.step) * K);
    if (!(x < one)) return BigReal::infinity();
    bound /= pow(one - x, f.power);
  }
  return bound;
}

SeriesResult sum_hyper(const HyperSeriesSpec& spec, const SumControl& control) {
  if (control.digits < BigReal::kMinDigits) throw DomainError("sum_hyper: digits must be >= 20");
  if (control.fixed_terms && *control.fixed_terms < 0) throw DomainError("sum_hyper: negative term count");

  const BigReal& q = spec.q;
  const BigReal tol = BigReal::pow10(-control.digits, control.digits);

  std::vector<FactorState> numer = start(spec.ratio.numer, q);
  std::vector<FactorState> denom = start(spec.ratio.denom, q);
  BigReal monomial = spec.ratio.scale;
  const BigReal monomial_step = pow(q, spec.ratio.q_step);

  std::vector<BigReal> weighted = spec.weights;  // w_j q^{jk}
  std::vector<BigReal> weight_step;
  for (std::size_t j = 0; j < weighted.size(); ++j) weight_step.push_back(pow(q, static_cast<long>(j)));

  BigReal head = spec.direct_head ? spec.direct_head(0) : spec.first_term;
  head = head.with_digits(std::max(control.digits, head.digits()));
  BigReal sum = BigReal(0).with_digits(control.digits);
  BigReal largest(0);
  int small_run = 0;
  long n = 0;

  const long cap = control.fixed_terms ? *control.fixed_terms : control.max_terms;
  while (true) {
    if (n >= cap) {
      if (control.fixed_terms) break;
      throw NonConvergenceError("sum_hyper: no certified tail after " + std::to_string(cap) + " terms");
    }
    BigReal term = head;
    if (!weighted.empty()) {
      BigReal w(0);
      for (const BigReal& wq : weighted) w += wq;
      term *= w;
    }
    sum += term;
    ++n;

    // H_n from H_{n-1}; the numerator is checked first so a terminating
    // series never evaluates a denominator past its last term.
    BigReal num = monomial * product(numer);
    if (spec.direct_head) {
      head = spec.direct_head(n);
    } else if (num.is_zero() || head.is_zero()) {
      head = BigReal(0);
    } else {
      BigReal den = product(denom);
      if (den.is_zero()) throw ZeroDenominatorError("sum_hyper: denominator factor vanishes at k=" + std::to_string(n - 1));
      head *= num / den;
    }
    step_all(numer);
    step_all(denom);
    monomial *= monomial_step;
    for (std::size_t j = 0; j < weighted.size(); ++j) weighted[j] *= weight_step[j];

    if (control.fixed_terms) continue;
    if (head.is_zero() && !spec.direct_head) return {std::move(sum), static_cast<std::size_t>(n), ErrorBound::zero()};

    const BigReal aterm = abs(term);
    if (largest < aterm) largest = aterm;
    const BigReal threshold = tol * max(abs(sum), largest);
    small_run = aterm <= threshold ? small_run + 1 : 0;
    if (small_run >= control.stable_terms) {
      BigReal tail = tail_bound(spec, head, weighted, n);
      if (tail <= threshold) return {std::move(sum), static_cast<std::size_t>(n), ErrorBound{std::move(tail), BoundKind::truncation}};
    }
  }
  BigReal tail = head.is_zero() && !spec.direct_head ? BigReal(0) : tail_bound(spec, head, weighted, n);
  return {std::move(sum), static_cast<std::size_t>(n), ErrorBound{std::move(tail), BoundKind::truncation}};
}

}  // namespace qpi
