#pragma once

// Classical pi-formulas summed directly with certified tails, the q -> 1
// sine-product forms of the telescoping corollaries, and normalised q -> 1
// extrapolation of the q-identities.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpi/bounds.hpp"
#include "qpi/catalog.hpp"
#include "qpi/verification.hpp"

namespace qpi::limits {

enum class TailKind { alternating, integral, geometric, gautschi };
std::string_view to_string(TailKind kind);

struct ClassicalFormula {
  std::string id;
  std::string anchor;
  std::string summary;
  std::string target_text;             // e.g. "pi^2/6"
  std::vector<std::string> params;     // free symbols besides N
  std::vector<ParamPoint> default_points;  // include N
  int tolerance_exponent = -30;        // what the default N certifies
  TailKind tail = TailKind::geometric;
  /// S_N plus tail estimate, bound covering the remaining tail. N counts terms.
  std::function<SeriesResult(const ParamPoint&, long n, int digits)> partial;
  /// Bare S_N.
  std::function<BigReal(const ParamPoint&, long n, int digits)> partial_sum;
  std::function<BigReal(const ParamPoint&, int digits)> target;
};

const std::vector<ClassicalFormula>& classical_formulas();
/// Throws DomainError for unknown ids.
const ClassicalFormula& classical_formula(std::string_view id);

/// Partial sum of N terms with the formula's tail treatment.
SeriesResult classical_sum(const ClassicalFormula& formula, const ParamPoint& point, long n, int digits);

/// Bare partial sum of N terms with no tail.
BigReal classical_partial_sum(const ClassicalFormula& formula, const ParamPoint& point, long n, int digits);

enum class SineForm {
  product,     // prod sin(pi x_i) / pi^m as a series
  reciprocal,  // pi^m / prod sin(pi x_i) with the leading term 1/prod(1 - x_i)
};

/// Series side of the q -> 1 corollary forms, N terms plus a two-sided tail
/// bracket. Requires 0 < x_i < 1 and N >= 16.
SeriesResult sine_product_series(std::span<const Rational> xs, SineForm form, long n, int digits);
BigReal sine_product_target(std::span<const Rational> xs, SineForm form, int digits);
VerificationReport sine_product_limit(std::span<const Rational> xs, SineForm form, long n, int digits,
                                      const BigReal& tolerance);

struct LimitProbe {
  std::string id;
  int exponent = 0;
  Rational h0{1, 16};
  int level_first = 4;
  int level_last = 12;
  int order = 5;
};

enum class LimitStatus { ok, zero, unstable };
std::string_view to_string(LimitStatus status);

struct LimitResult {
  std::string id;
  int exponent = 0;
  BigReal value;                    // final extrapolant
  BigReal diagnostic;               // |last two extrapolants|
  std::vector<BigReal> diagnostics;  // per level once `order` is reachable
  std::vector<Rational> qs;
  std::vector<BigReal> samples;     // (1-q)^a LHS(q)
  LimitStatus status = LimitStatus::ok;
  std::string target_text;
  std::optional<BigReal> target;
  std::optional<BigReal> error;     // |value - target|
  std::size_t terms = 0;
  double wall_ms = 0;
};

/// Richardson extrapolation to h = 0 of samples at h_j = h0 2^-j, assuming an
/// expansion in integer powers of h. Returns the extrapolants of the given
/// order for every level where they exist.
std::vector<BigReal> richardson(std::span<const BigReal> samples, int order);

/// Unnormalised LHS(q) at the probe's q-levels. Independent of the exponent,
/// so one sampling serves several normalisations.
struct LimitSamples {
  std::vector<Rational> qs;
  std::vector<BigReal> lhs;
  std::size_t terms = 0;
  int digits = 0;
  double wall_ms = 0;
};

/// Throws DomainError when the record has no LHS in q alone or when the probe
/// is malformed (levels must span at least order + 2).
LimitSamples sample_lhs(const IdentityRecord& record, const LimitProbe& probe, int digits = 30);

/// Normalises the samples with the probe's exponent and extrapolates. The
/// samples must come from a probe with the same h0 and levels.
LimitResult extrapolate(const IdentityRecord& record, const LimitProbe& probe, const LimitSamples& samples);

/// sample_lhs followed by extrapolate.
LimitResult q_to_1_limit(const IdentityRecord& record, const LimitProbe& probe, int digits = 30);

/// Probe with the record's shipped exponent and default levels.
LimitProbe default_probe(const IdentityRecord& record);

}  // namespace qpi::limits
