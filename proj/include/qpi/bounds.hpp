#pragma once

#include <cstddef>
#include <string_view>

#include "qpi/bigreal.hpp"

namespace qpi {

enum class BoundKind { truncation, rounding, combined };

std::string_view to_string(BoundKind kind);

/// Non-negative absolute error bound attached to a computed value.
struct ErrorBound {
  BigReal magnitude;
  BoundKind kind = BoundKind::truncation;

  static ErrorBound zero(BoundKind kind = BoundKind::truncation) { return {BigReal(0), kind}; }
  /// Sum of both magnitudes; the result dominates each constituent.
  [[nodiscard]] ErrorBound combined_with(const ErrorBound& other) const;
};

/// A value with its certified error bound and the number of series terms
/// (or product factors) spent computing it.
///
/// The arithmetic operators propagate bounds to first order plus the
/// cross term, treating the operands' errors as independent worst cases.
/// Rounding is not tracked here; guard digits cover it.
struct SeriesResult {
  BigReal value;
  std::size_t terms_used = 0;
  ErrorBound bound;

  static SeriesResult exact(BigReal value) { return {std::move(value), 0, ErrorBound::zero()}; }

  SeriesResult& operator+=(const SeriesResult& rhs);
  SeriesResult& operator-=(const SeriesResult& rhs);
  SeriesResult& operator*=(const SeriesResult& rhs);
  SeriesResult& operator/=(const SeriesResult& rhs);
  SeriesResult& operator*=(const BigReal& exact_factor);

  friend SeriesResult operator+(SeriesResult a, const SeriesResult& b) { return a += b; }
  friend SeriesResult operator-(SeriesResult a, const SeriesResult& b) { return a -= b; }
  friend SeriesResult operator*(SeriesResult a, const SeriesResult& b) { return a *= b; }
  friend SeriesResult operator/(SeriesResult a, const SeriesResult& b) { return a /= b; }
  friend SeriesResult operator*(SeriesResult a, const BigReal& b) { return a *= b; }
};

/// x^n for n >= 0 with propagated bound.
SeriesResult pow(const SeriesResult& x, int n);

}  // namespace qpi
