#include "qpi/telescoping.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "qpi/errors.hpp"
#include "qpi/qpochhammer.hpp"
#include "qpi/series.hpp"

namespace qpi::telescoping {

namespace {

const Family kFamily = Family::telescoping;

BigReal big(const Rational& r, int digits) { return to_bigreal(r, std::max(digits, BigReal::kMinDigits)); }

std::vector<Rational> shifted(std::span<const Rational> v, const Rational& factor) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(x * factor);
  return out;
}

Rational one_minus_product(std::span<const Rational> v) {
  Rational p(1);
  for (const Rational& x : v) p *= Rational(1) - x;
  return p;
}

/// Coefficients of a - b as polynomials in t, padded to the longer length.
std::vector<Rational> difference(std::vector<Rational> a, const std::vector<Rational>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  return a;
}

std::vector<BigReal> to_big(const std::vector<Rational>& v, int digits) {
  std::vector<BigReal> out;
  out.reserve(v.size());
  for (const Rational& r : v) out.push_back(big(r, digits));
  return out;
}

SeriesResult sum_at(const HyperSeriesSpec& h, int digits) {
  SumControl c;
  c.digits = digits;
  return sum_hyper(h, c);
}

ParamPoint point_of(std::span<const Rational> xs, std::span<const Rational> ys, const Rational& q) {
  ParamPoint p;
  for (std::size_t i = 0; i < xs.size(); ++i) p.set("x" + std::to_string(i + 1), xs[i]);
  for (std::size_t i = 0; i < ys.size(); ++i) p.set("y" + std::to_string(i + 1), ys[i]);
  p.set("q", q);
  return p;
}

void require_q(const Rational& q) {
  if (!(q.sign() > 0 && q < Rational(1))) throw DomainError("q must lie in (0,1), got " + q.str());
}

}  // namespace

void validate(const TelescopeSpec& spec) {
  if (spec.xs.empty() || spec.xs.size() != spec.ys.size())
    throw DomainError("telescoping spec needs equally many x and y parameters (at least one)");
  require_q(spec.q);
  for (const Rational& y : spec.ys) {
    // (q y; q)_k has the factor 1 - y q^{j+1}; it vanishes iff y = q^{-m-1}.
    Rational v = spec.q * y;
    while (v.sign() > 0 && !(v < Rational(1))) {
      if (v == Rational(1)) throw DomainError("y = " + y.str() + " makes a factor of (q y; q)_k vanish");
      v *= spec.q;
    }
  }
}

std::vector<Rational> coefficient_vector(const TelescopeSpec& spec) {
  const std::vector<Rational> a = product_coefficients<Rational>(spec.xs);
  const std::vector<Rational> b = product_coefficients<Rational>(spec.ys);
  std::vector<Rational> d = difference(a, b);
  d.erase(d.begin());  // constant terms are both 1
  return d;
}

Rational tau(const TelescopeSpec& spec, long k) {
  validate(spec);
  if (k < -1) throw DomainError("tau is defined for k >= -1");
  if (k == -1) {
    const Rational px = one_minus_product(spec.xs);
    if (px.is_zero()) throw ZeroDenominatorError("tau_{-1}: some x_i = 1");
    return one_minus_product(spec.ys) / px;
  }
  const std::vector<Rational> qx = shifted(spec.xs, spec.q);
  const std::vector<Rational> qy = shifted(spec.ys, spec.q);
  return qpoch_multi<Rational>(qx, spec.q, k) / qpoch_multi<Rational>(qy, spec.q, k);
}

Rational summand(const TelescopeSpec& spec, long k) {
  validate(spec);
  if (k < 0) throw DomainError("summand index must be non-negative");
  const std::vector<Rational> qy = shifted(spec.ys, spec.q);
  const Rational qk = spec.q.pow(k);
  const Rational brace = one_minus_product(shifted(spec.xs, qk)) - one_minus_product(shifted(spec.ys, qk));
  if (brace.is_zero()) return Rational(0);
  return qpoch_multi<Rational>(spec.xs, spec.q, k) / qpoch_multi<Rational>(qy, spec.q, k) * brace;
}

Rational nabla_check(const TelescopeSpec& spec, long k) {
  if (k < 0) throw DomainError("nabla_check needs k >= 0");
  const Rational px = one_minus_product(spec.xs);
  if (px.is_zero()) throw ZeroDenominatorError("closed form of nabla tau_k: some x_i = 1");
  const Rational direct = tau(spec, k) - tau(spec, k - 1);
  return direct - summand(spec, k) / px;
}

FiniteSum finite_sum_identity(const TelescopeSpec& spec, long n) {
  validate(spec);
  if (n < 0) throw DomainError("finite_sum_identity needs n >= 0");
  // Accumulate the Pochhammer ratio incrementally; summand() recomputes it.
  const Rational& q = spec.q;
  Rational lhs(0);
  Rational h(1);  // (x;q)_k / (q y;q)_k
  Rational qk(1);
  for (long k = 0; k <= n; ++k) {
    const Rational brace = one_minus_product(shifted(spec.xs, qk)) - one_minus_product(shifted(spec.ys, qk));
    lhs += h * brace;
    h *= one_minus_product(shifted(spec.xs, qk));
    h /= one_minus_product(shifted(spec.ys, qk * q));
    qk *= q;
  }
  const std::vector<Rational> qy = shifted(spec.ys, q);
  const Rational rhs = qpoch_multi<Rational>(spec.xs, q, n + 1) / qpoch_multi<Rational>(qy, q, n) - one_minus_product(spec.ys);
  return {lhs, rhs, lhs - rhs};
}

SeriesResult infinite_lhs(const TelescopeSpec& spec, int digits) {
  validate(spec);
  const BigReal q = big(spec.q, digits);
  HyperSeriesSpec h;
  h.q = q;
  for (const Rational& x : spec.xs) h.ratio.numer.push_back({big(x, digits), 1, 1});
  for (const Rational& y : spec.ys) h.ratio.denom.push_back({big(spec.q * y, digits), 1, 1});
  std::vector<Rational> w = coefficient_vector(spec);
  w.insert(w.begin(), Rational(0));
  h.weights = to_big(w, digits);
  return sum_at(h, digits);
}

SeriesResult infinite_rhs(const TelescopeSpec& spec, int digits) {
  validate(spec);
  const Rational& q = spec.q;
  std::vector<Rational> xs = spec.xs;
  std::vector<Rational> qys = shifted(spec.ys, q);
  Rational exact(1);
  // (x;q)_inf / (q x;q)_inf = 1 - x and (q y;q)_inf / (q y;q)_inf = 1.
  for (auto it = xs.begin(); it != xs.end();) {
    auto same = std::find(qys.begin(), qys.end(), *it);
    auto shifted_match = std::find(qys.begin(), qys.end(), *it * q);
    if (same != qys.end()) {
      qys.erase(same);
      it = xs.erase(it);
    } else if (shifted_match != qys.end()) {
      exact *= Rational(1) - *it;
      qys.erase(shifted_match);
      it = xs.erase(it);
    } else {
      ++it;
    }
  }
  const Rational tail = one_minus_product(spec.ys);
  if (xs.empty() && qys.empty()) return SeriesResult::exact(big(exact - tail, digits));
  std::vector<PowFactor> factors;
  for (const Rational& x : xs) factors.push_back({big(x, digits), 1, 1});
  for (const Rational& y : qys) factors.push_back({big(y, digits), 1, -1});
  SeriesResult r = qpoch_power_product(factors, big(q, digits), digits);
  r *= big(exact, digits);
  r -= SeriesResult::exact(big(tail, digits));
  return r;
}

VerificationReport infinite_identity(const TelescopeSpec& spec, int digits, const BigReal& tolerance) {
  validate(spec);
  return verify_sides(
      "thm-aa", kFamily, "Let $\\{x_i\\}_{i=1}^s$ and $\\{y_i\\}_{i=1}^s$ be complex", point_of(spec.xs, spec.ys, spec.q),
      [spec](const ParamPoint&, int d) { return SideValue::from_series(infinite_lhs(spec, d)); },
      [spec](const ParamPoint&, int d) { return SideValue::from_series(infinite_rhs(spec, d)); }, digits, tolerance);
}

void require_off_q_lattice(const Rational& x, const Rational& q, const std::string& what) {
  require_q(q);
  if (x.is_zero()) throw DomainError(what + " vanishes");
  if (x.sign() < 0) return;
  Rational v = x;
  if (!(v < Rational(1))) {
    while (!(v < Rational(1))) {
      if (v == Rational(1)) throw DomainError(what + " = " + x.str() + " is an integer power of q (pole)");
      v *= q;
    }
  } else {
    while (v < Rational(1)) v /= q;
    if (v == Rational(1)) throw DomainError(what + " = " + x.str() + " is an integer power of q (pole)");
  }
}

namespace {

void check_corollary_inputs(std::span<const Rational> xs, const Rational& q) {
  if (xs.empty()) throw DomainError("corollary needs m >= 1 parameters");
  for (std::size_t i = 0; i < xs.size(); ++i) require_off_q_lattice(xs[i], q, "x" + std::to_string(i + 1));
}

std::vector<Rational> power_of_linear(const Rational& root, std::size_t power) {
  std::vector<Rational> roots(power, root);
  return product_coefficients<Rational>(roots);
}

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ParamPoint corollary_point(std::span<const Rational> xs, const Rational& q) {
  ParamPoint p;
  for (std::size_t i = 0; i < xs.size(); ++i) p.set("x" + std::to_string(i + 1), xs[i]);
  p.set("q", q);
  return p;
}

}  // namespace

TelescopeSpec corollary_a_spec(std::span<const Rational> xs, const Rational& q) {
  TelescopeSpec s;
  s.q = q;
  for (const Rational& x : xs) s.xs.push_back(x);
  for (const Rational& x : xs) s.xs.push_back(q / x);
  s.ys.assign(xs.size(), Rational(1));
  s.ys.insert(s.ys.end(), xs.size(), q);
  return s;
}

SeriesResult corollary_a_product(std::span<const Rational> xs, const Rational& q, int digits) {
  check_corollary_inputs(xs, q);
  const int m = static_cast<int>(xs.size());
  std::vector<PowFactor> f;
  for (const Rational& x : xs) {
    f.push_back({big(x, digits), 1, 1});
    f.push_back({big(q / x, digits), 1, 1});
  }
  f.push_back({big(q, digits), 1, -m});
  f.push_back({big(q * q, digits), 1, -m});
  return qpoch_power_product(f, big(q, digits), digits);
}

SeriesResult corollary_a_series(std::span<const Rational> xs, const Rational& q, int digits) {
  check_corollary_inputs(xs, q);
  const int m = static_cast<int>(xs.size());
  HyperSeriesSpec h;
  h.q = big(q, digits);
  std::vector<Rational> roots;
  for (const Rational& x : xs) {
    h.ratio.numer.push_back({big(x, digits), 1, 1});
    h.ratio.numer.push_back({big(q / x, digits), 1, 1});
    roots.push_back(x);
    roots.push_back(q / x);
  }
  h.ratio.denom = {{big(q, digits), 1, m}, {big(q * q, digits), 1, m}};
  // prod(1 - x_i t)(1 - (q/x_i) t) - (1 - t)^m (1 - q t)^m with t = q^k
  const std::vector<Rational> brace =
      difference(product_coefficients<Rational>(roots),
                 multiply(power_of_linear(Rational(1), xs.size()), power_of_linear(q, xs.size())));
  h.weights = to_big(brace, digits);
  return sum_at(h, digits);
}

VerificationReport corollary_a(std::span<const Rational> xs, const Rational& q, int digits, const BigReal& tolerance) {
  check_corollary_inputs(xs, q);
  std::vector<Rational> v(xs.begin(), xs.end());
  return verify_sides(
      "corl-aa", kFamily, "Performing the the replacements  $y_i\\to1$", corollary_point(xs, q),
      [v, q](const ParamPoint&, int d) { return SideValue::from_series(corollary_a_product(v, q, d)); },
      [v, q](const ParamPoint&, int d) { return SideValue::from_series(corollary_a_series(v, q, d)); }, digits, tolerance);
}

SeriesResult corollary_b_product(std::span<const Rational> xs, const Rational& q, int digits) {
  check_corollary_inputs(xs, q);
  const int m = static_cast<int>(xs.size());
  std::vector<PowFactor> f{{big(q, digits), 1, 2 * m}};
  for (const Rational& x : xs) {
    f.push_back({big(x, digits), 1, -1});
    f.push_back({big(q / x, digits), 1, -1});
  }
  return qpoch_power_product(f, big(q, digits), digits);
}

SeriesResult corollary_b_series(std::span<const Rational> xs, const Rational& q, int digits) {
  check_corollary_inputs(xs, q);
  const int m = static_cast<int>(xs.size());
  Rational leading(1);
  Rational first(1);
  std::vector<Rational> roots;
  HyperSeriesSpec h;
  h.q = big(q, digits);
  h.ratio.numer = {{big(q, digits), 1, 2 * m}};
  for (const Rational& x : xs) {
    leading /= Rational(1) - q / x;
    first /= (Rational(1) - x) * (Rational(1) - q / x) * (Rational(1) - q * q / x);
    h.ratio.denom.push_back({big(q * x, digits), 1, 1});
    h.ratio.denom.push_back({big(q.pow(3) / x, digits), 1, 1});
    roots.push_back(x);
    roots.push_back(q * q / x);
  }
  h.first_term = big(first, digits);
  // (1 - q t)^{2m} - prod(1 - x_i t)(1 - (q^2/x_i) t)
  h.weights = to_big(difference(power_of_linear(q, 2 * xs.size()), product_coefficients<Rational>(roots)), digits);
  SeriesResult r = sum_at(h, digits);
  r += SeriesResult::exact(big(leading, digits));
  return r;
}

VerificationReport corollary_b(std::span<const Rational> xs, const Rational& q, int digits, const BigReal& tolerance) {
  check_corollary_inputs(xs, q);
  std::vector<Rational> v(xs.begin(), xs.end());
  return verify_sides(
      "corl-bb", kFamily, "Performing the the replacements $x_i\\to q$", corollary_point(xs, q),
      [v, q](const ParamPoint&, int d) { return SideValue::from_series(corollary_b_product(v, q, d)); },
      [v, q](const ParamPoint&, int d) { return SideValue::from_series(corollary_b_series(v, q, d)); }, digits, tolerance);
}

}  // namespace qpi::telescoping
