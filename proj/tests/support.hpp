#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qpi/bigreal.hpp"
#include "qpi/rational.hpp"

namespace qpi::testing {

/// Seeded source of small random rationals for property tests.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// p/r with |p| <= max_num, 1 <= r <= max_den.
  Rational any(long max_num = 20, long max_den = 20) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  /// Strictly inside (0,1).
  Rational unit(long max_den = 20) {
    const long den = integer(2, max_den);
    return Rational(integer(1, den - 1), den);
  }

  /// Inside (lo, hi) as a fraction with denominator up to max_den, avoiding the endpoints.
  Rational between(const Rational& lo, const Rational& hi, long max_den = 30) {
    const long den = integer(2, max_den);
    const Rational width = hi - lo;
    return lo + width * Rational(integer(1, den - 1), den);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// |a - b| <= tol, with a readable failure message.
inline bool close(const BigReal& a, const BigReal& b, const BigReal& tol) { return abs(a - b) <= tol; }

inline BigReal dec(const char* text, int digits = 100) { return BigReal::parse(text, digits); }

}  // namespace qpi::testing
