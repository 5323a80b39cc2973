#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qpi/bigreal.hpp"
#include "qpi/bounds.hpp"

namespace qpi {

/// One factor (1 - coeff * q^(step*k))^power of a term ratio.
struct QFactor {
  BigReal coeff;
  int step = 1;   // >= 0
  int power = 1;  // >= 1
};

/// t_{k+1} / t_k = scale * q^(q_step*k) * prod(numer) / prod(denom), as a
/// function of k = 0, 1, 2, ...
struct TermRatio {
  BigReal scale{1};
  int q_step = 0;  // >= 0
  std::vector<QFactor> numer;
  std::vector<QFactor> denom;
};

/// A series sum_k H_k * (w_0 + w_1 q^k + w_2 q^{2k} + ...), where H_k is
/// generated from H_0 by a TermRatio. With no weights the summand is H_k.
///
/// Polynomial weights cover the very-well-poised factor (1 - w q^{2k}) and
/// the telescoping summands whose brace is a polynomial in q^k.
struct HyperSeriesSpec {
  BigReal q;
  BigReal first_term{1};
  TermRatio ratio;
  std::vector<BigReal> weights;
  /// Optional independent evaluation of H_k (debug cross-check). When set it
  /// replaces the recurrence for every term; the ratio is still used for the
  /// tail majorant.
  std::function<BigReal(long k)> direct_head;
};

struct SumControl {
  int digits = 60;
  long max_terms = 20'000'000;
  /// Sum exactly this many terms instead of stopping adaptively. The tail
  /// bound is still reported (infinite if it cannot be certified).
  std::optional<long> fixed_terms;
  int stable_terms = 3;
};

/// Sums the series with the recurrence and a certified tail bound.
///
/// Adaptive stopping requires `stable_terms` consecutive summands below
/// 10^-digits times the running scale and a finite tail majorant below the
/// same threshold. Throws ZeroDenominatorError if a denominator factor is an
/// exact zero and NonConvergenceError when max_terms is reached.
SeriesResult sum_hyper(const HyperSeriesSpec& spec, const SumControl& control);

/// Upper bound on |t_{k+1}/t_k| valid for every k >= K, or +inf if none can
/// be given (q outside [0,1), a denominator factor not yet bounded away from
/// zero). Exposed for tests.
BigReal ratio_majorant(const TermRatio& ratio, const BigReal& q, long K);

}  // namespace qpi
