#pragma once

#include <optional>
#include <vector>

#include "qpi/bigreal.hpp"
#include "qpi/bounds.hpp"
#include "qpi/series.hpp"

namespace qpi {

/// Parameters of the basic hypergeometric series
///   sum_k (a0,...,ar;q)_k / (q,b1,...,bs;q)_k * ((-1)^k q^{k(k-1)/2})^{s-r} z^k.
struct PhiSeriesSpec {
  std::vector<BigReal> upper;  // a0..ar
  std::vector<BigReal> lower;  // b1..bs
  BigReal z;
  BigReal q;
  /// When set to w, each term is multiplied by (1 - w q^{2k}) / (1 - w), the
  /// very-well-poised factor with w = a (written in the usual notation as
  /// q sqrt(a), -q sqrt(a) over sqrt(a), -sqrt(a)). Avoids square roots.
  std::optional<BigReal> well_poised;
};

enum class PhiMode {
  recurrence,  // term ratio recurrence (default)
  direct,      // every term recomputed from its q-Pochhammer products (cross-check)
};

/// Translates a PhiSeriesSpec into the generic series description.
HyperSeriesSpec to_hyper(const PhiSeriesSpec& spec, PhiMode mode = PhiMode::recurrence);

/// Evaluates the series with a certified truncation bound.
SeriesResult phi_series(const PhiSeriesSpec& spec, int digits, PhiMode mode = PhiMode::recurrence);

/// Same, with full control over the stopping rule.
SeriesResult phi_series(const PhiSeriesSpec& spec, const SumControl& control, PhiMode mode = PhiMode::recurrence);

}  // namespace qpi
