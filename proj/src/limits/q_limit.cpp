#include <chrono>

#include "qpi/errors.hpp"
#include "qpi/limits.hpp"

namespace qpi::limits {

std::string_view to_string(LimitStatus status) {
  switch (status) {
    case LimitStatus::ok: return "ok";
    case LimitStatus::zero: return "zero";
    case LimitStatus::unstable: return "unstable";
  }
  return "unknown";
}

std::vector<BigReal> richardson(std::span<const BigReal> samples, int order) {
  if (order < 1) throw DomainError("extrapolation order must be positive");
  std::vector<BigReal> out;
  // row[p] holds the order-p extrapolant at the current level.
  std::vector<BigReal> prev;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::vector<BigReal> row{samples[i]};
    for (std::size_t p = 1; p <= i && p <= static_cast<std::size_t>(order); ++p) {
      const BigReal f = pow(BigReal(2), static_cast<long>(p));
      row.push_back((f * row[p - 1] - prev[p - 1]) / (f - BigReal(1)));
    }
    if (row.size() == static_cast<std::size_t>(order) + 1) out.push_back(row.back());
    prev = std::move(row);
  }
  return out;
}

LimitProbe default_probe(const IdentityRecord& record) {
  if (!record.limit_exponent) throw DomainError("'" + record.id + "' has no q -> 1 normalisation");
  LimitProbe p;
  p.id = record.id;
  p.exponent = *record.limit_exponent;
  return p;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); }

void check_probe(const LimitProbe& probe) {
  if (probe.exponent < -8 || probe.exponent > 16) throw DomainError("normalisation exponent must lie in [-8, 16]");
  if (probe.level_last - probe.level_first < probe.order + 2)
    throw DomainError("levels must span at least order + 2");
  if (probe.order < 1) throw DomainError("extrapolation order must be positive");
  if (!(probe.h0.sign() > 0 && probe.h0 < Rational(1))) throw DomainError("h0 must lie in (0,1)");
}

Rational h_at(const LimitProbe& probe, int j) { return probe.h0 / Rational(1L << j); }

}  // namespace

LimitSamples sample_lhs(const IdentityRecord& record, const LimitProbe& probe, int digits) {
  const auto start = Clock::now();
  if (!record.uses_q_grid || !record.lhs) throw DomainError("'" + record.id + "' is not a series in q alone");
  check_probe(probe);
  LimitSamples out;
  out.digits = std::max(digits, BigReal::kMinDigits);
  for (int j = probe.level_first; j <= probe.level_last; ++j) {
    const Rational q = Rational(1) - h_at(probe, j);
    // Ten guard digits against cancellation in the normalised sum.
    const SideValue v = eval_side(record, Side::lhs, ParamPoint{{"q", q}}, out.digits + 10);
    out.qs.push_back(q);
    out.lhs.push_back(v.approx.value);
    out.terms += v.approx.terms_used;
  }
  out.wall_ms = ms_since(start);
  return out;
}

LimitResult extrapolate(const IdentityRecord& record, const LimitProbe& probe, const LimitSamples& samples) {
  const auto start = Clock::now();
  check_probe(probe);
  const std::size_t levels = static_cast<std::size_t>(probe.level_last - probe.level_first + 1);
  if (samples.lhs.size() != levels || samples.qs.size() != levels)
    throw DomainError("samples do not match the probe's levels");
  for (std::size_t i = 0; i < levels; ++i) {
    if (samples.qs[i] != Rational(1) - h_at(probe, probe.level_first + static_cast<int>(i)))
      throw DomainError("samples were taken at different q");
  }
  const int d = samples.digits;

  LimitResult res;
  res.id = record.id;
  res.exponent = probe.exponent;
  res.target_text = record.limit_target;
  res.qs = samples.qs;
  res.terms = samples.terms;
  for (std::size_t i = 0; i < levels; ++i) {
    const Rational h = Rational(1) - samples.qs[i];
    res.samples.push_back((pow(to_bigreal(h, d + 10), probe.exponent) * samples.lhs[i]).with_digits(d));
  }
  const std::vector<BigReal> ext = richardson(res.samples, probe.order);
  res.value = ext.back();
  for (std::size_t i = 1; i < ext.size(); ++i) res.diagnostics.push_back(abs(ext[i] - ext[i - 1]));
  res.diagnostic = res.diagnostics.back();

  // Growth over the last three levels (beyond noise) marks divergence.
  const BigReal noise = BigReal::pow10(-(d - 5), d) * max(BigReal(1), abs(res.value));
  const std::size_t n = res.diagnostics.size();
  bool growing = false;
  if (n >= 3) {
    const BigReal& a = res.diagnostics[n - 3];
    const BigReal& b = res.diagnostics[n - 2];
    const BigReal& c = res.diagnostics[n - 1];
    growing = c > noise && b > BigReal(2) * a && c > BigReal(2) * b;
  }
  if (growing || res.diagnostic > BigReal::pow10(-3, d) * max(BigReal(1), abs(res.value))) {
    res.status = LimitStatus::unstable;
  } else if (abs(res.value) <= BigReal::pow10(-12, d)) {
    res.status = LimitStatus::zero;
  } else {
    res.status = LimitStatus::ok;
  }
  if (record.limit_value) {
    res.target = record.limit_value(d);
    res.error = abs(res.value - *res.target);
  }
  res.wall_ms = samples.wall_ms + ms_since(start);
  return res;
}

LimitResult q_to_1_limit(const IdentityRecord& record, const LimitProbe& probe, int digits) {
  return extrapolate(record, probe, sample_lhs(record, probe, digits));
}

}  // namespace qpi::limits
