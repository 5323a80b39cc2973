#include "qpi/bounds.hpp"

#include "qpi/errors.hpp"

namespace qpi {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::truncation: return "truncation";
    case BoundKind::rounding: return "rounding";
    case BoundKind::combined: return "combined";
  }
  return "unknown";
}

namespace {

BoundKind merge(BoundKind a, BoundKind b) { return a == b ? a : BoundKind::combined; }

}  // namespace

ErrorBound ErrorBound::combined_with(const ErrorBound& other) const {
  return {magnitude + other.magnitude, merge(kind, other.kind)};
}

SeriesResult& SeriesResult::operator+=(const SeriesResult& rhs) {
  value += rhs.value;
  bound = bound.combined_with(rhs.bound);
  terms_used += rhs.terms_used;
  return *this;
}

SeriesResult& SeriesResult::operator-=(const SeriesResult& rhs) {
  value -= rhs.value;
  bound = bound.combined_with(rhs.bound);
  terms_used += rhs.terms_used;
  return *this;
}

SeriesResult& SeriesResult::operator*=(const SeriesResult& rhs) {
  // |ab - AB| <= |a| eb + |b| ea + ea eb
  BigReal err = abs(value) * rhs.bound.magnitude + abs(rhs.value) * bound.magnitude + bound.magnitude * rhs.bound.magnitude;
  value *= rhs.value;
  bound = {std::move(err), merge(bound.kind, rhs.bound.kind)};
  terms_used += rhs.terms_used;
  return *this;
}

SeriesResult& SeriesResult::operator/=(const SeriesResult& rhs) {
  const BigReal denom = abs(rhs.value);
  if (denom.is_zero()) throw ZeroDenominatorError("SeriesResult: division by an exact zero");
  if (!(denom > rhs.bound.magnitude))
    throw ZeroDenominatorError("SeriesResult: divisor not separated from zero by its error bound");
  // |a/b - A/B| <= (|a| eb + |b| ea) / (|b| (|b| - eb))
  BigReal err = (abs(value) * rhs.bound.magnitude + denom * bound.magnitude) / (denom * (denom - rhs.bound.magnitude));
  value /= rhs.value;
  bound = {std::move(err), merge(bound.kind, rhs.bound.kind)};
  terms_used += rhs.terms_used;
  return *this;
}

SeriesResult& SeriesResult::operator*=(const BigReal& exact_factor) {
  value *= exact_factor;
  bound.magnitude *= abs(exact_factor);
  return *this;
}

SeriesResult pow(const SeriesResult& x, int n) {
  if (n < 0) throw DomainError("SeriesResult pow: negative exponent");
  SeriesResult r = SeriesResult::exact(BigReal(1));
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace qpi
