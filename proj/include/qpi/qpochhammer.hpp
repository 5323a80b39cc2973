#pragma once

#include <span>
#include <vector>

#include "qpi/bigreal.hpp"
#include "qpi/bounds.hpp"
#include "qpi/errors.hpp"
#include "qpi/rational.hpp"

namespace qpi {

/// (x;q)_n = (1-x)(1-xq)...(1-xq^{n-1}); exact for Rational.
template <class T>
T qpoch_finite(const T& x, const T& q, long n) {
  if (n < 0) throw DomainError("qpoch_finite: negative index");
  T result(1);
  T term = x;
  for (long i = 0; i < n; ++i) {
    result *= T(1) - term;
    term *= q;
  }
  return result;
}

/// (x1,...,xr;q)_n, the product of the single-argument symbols.
template <class T>
T qpoch_multi(std::span<const T> xs, const T& q, long n) {
  T result(1);
  for (const T& x : xs) result *= qpoch_finite(x, q, n);
  return result;
}

/// Rising factorial (x)_n = x(x+1)...(x+n-1).
template <class T>
T pochhammer(const T& x, long n) {
  if (n < 0) throw DomainError("pochhammer: negative index");
  T result(1);
  T factor = x;
  for (long i = 0; i < n; ++i) {
    result *= factor;
    factor += T(1);
  }
  return result;
}

/// (x;q)_inf truncated where |x| q^I / (1-q) < 10^-digits, with a bound on
/// the omitted factors. Requires 0 < q < 1.
SeriesResult qpoch_infinite(const BigReal& x, const BigReal& q, int digits);

/// (x1,...,xr;q)_inf with bounds combined multiplicatively.
SeriesResult qpoch_multi_infinite(std::span<const BigReal> xs, const BigReal& q, int digits);

/// Convenience for a product of infinite symbols raised to integer powers,
/// e.g. (q;q)^2 (-q;q^2)^-3. Bases are (x, step) pairs meaning (x; q^step).
struct PowFactor {
  BigReal x;
  int step = 1;   // base is q^step
  int power = 1;  // may be negative
};
SeriesResult qpoch_power_product(std::span<const PowFactor> factors, const BigReal& q, int digits);

}  // namespace qpi
