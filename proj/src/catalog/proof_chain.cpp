// Intermediate identities used to derive the q-analogues: summation and
// transformation formulas, their specialisations, and the cubic and
// quadratic Chu-type identities. Displays with half-integer powers of q are
// stored after the substitution q -> q^2, so only integer powers occur; in
// those records the parameter q is the square root of the display's base.

#include "qpi/phi.hpp"
#include "records.hpp"

namespace qpi::catalog {

namespace {

using R = Rational;

IdentityRecord chain_record(std::string id, std::string anchor, std::string summary, std::vector<ParamSpec> params) {
  IdentityRecord r;
  r.id = std::move(id);
  r.family = Family::proof_chain;
  r.anchor = std::move(anchor);
  r.summary = std::move(summary);
  r.params = std::move(params);
  return r;
}

/// 8W7 very-well-poised series: 8phi7(w, q sqrt w, -q sqrt w, b1..b5; sqrt w, -sqrt w, wq/b1..wq/b5; q, z).
SeriesResult well_poised_8phi7(const BigReal& w, const std::vector<BigReal>& b, const BigReal& z, const BigReal& q, int digits) {
  PhiSeriesSpec s;
  s.upper.push_back(w);
  for (const BigReal& x : b) {
    s.upper.push_back(x);
    s.lower.push_back(w * q / x);
  }
  s.z = z;
  s.q = q;
  s.well_poised = w;
  SumControl c;
  c.digits = digits;
  return phi_series(s, c);
}

void require_abs_below_one(const Rational& x, const std::string& what) {
  if (!(x.abs() < Rational(1))) throw DomainError(what + " must have modulus below 1 for convergence");
}

// ---- 8phi7 summation ------------------------------------------------------

SeriesResult eight_phi_seven_sum_lhs(const ParamPoint& p, int d) {
  const BigReal a = big(p.at("a"), d), c = big(p.at("c"), d), dd = big(p.at("d"), d), q = big(p.at("q"), d);
  return well_poised_8phi7(-c, {a, q / a, c, -dd, -q / dd}, c, q, d);
}

SeriesResult eight_phi_seven_sum_rhs(const ParamPoint& p, int d) {
  const BigReal a = big(p.at("a"), d), c = big(p.at("c"), d), dd = big(p.at("d"), d), q = big(p.at("q"), d);
  return products({{-c, 1, 1},
                   {-c * q, 1, 1},
                   {a * c * dd, 2, 1},
                   {a * c * q / dd, 2, 1},
                   {c * dd * q / a, 2, 1},
                   {c * q * q / (a * dd), 2, 1},
                   {c * dd, 1, -1},
                   {c * q / dd, 1, -1},
                   {-a * c, 1, -1},
                   {-c * q / a, 1, -1}},
                  q, d);
}

void validate_eight_phi_seven_sum(const ParamPoint& p) {
  require_unit_interval(p);
  const R a = p.at("a"), c = p.at("c"), d = p.at("d"), q = p.at("q");
  require_nonzero(a, "a");
  require_nonzero(c, "c");
  require_nonzero(d, "d");
  require_abs_below_one(c, "c");
  if (c == R(-1)) throw DomainError("c = -1 makes the well-poised factor singular");
  for (const R& x : {-c * q / a, -a * c, -q, c * q / d, c * d}) require_no_pole(x, q, "lower parameter");
  for (const R& x : {c * d, c * q / d, -a * c, -c * q / a}) require_no_pole(x, q, "denominator product");
}

// ---- 5phi4 specialisation (after q -> q^2) ---------------------------------

SeriesResult five_phi_four_lhs(const BigReal& q, int d) {
  const BigReal p = q * q, q3 = pow(q, 3);
  PhiSeriesSpec s{{p, -q3, q, q, q}, {-q, q3, q3, q3}, -p, p, std::nullopt};
  SumControl c;
  c.digits = d;
  return phi_series(s, c);
}

SeriesResult five_phi_four_rhs(const BigReal& q, int d) {
  // (q^2, q^4; q^2)(q^4; q^4)^4 / (q^3; q^2)^4
  return products({{q * q, 2, 1}, {pow(q, 4), 2, 1}, {pow(q, 4), 4, 4}, {pow(q, 3), 2, -4}}, q, d);
}

// ---- 8phi7 transformation ---------------------------------------------------

struct TransformArgs {
  BigReal a, b, c, d, e, f, q, lambda;
};

TransformArgs transform_args(const ParamPoint& p, int digits) {
  TransformArgs t{big(p.at("a"), digits), big(p.at("b"), digits), big(p.at("c"), digits), big(p.at("d"), digits),
                  big(p.at("e"), digits), big(p.at("f"), digits), big(p.at("q"), digits), BigReal(0)};
  t.lambda = t.q * t.a * t.a / (t.b * t.c * t.d);
  return t;
}

SeriesResult transform_lhs(const ParamPoint& p, int digits) {
  const TransformArgs t = transform_args(p, digits);
  const BigReal z = t.a * t.a * t.q * t.q / (t.b * t.c * t.d * t.e * t.f);
  return well_poised_8phi7(t.a, {t.b, t.c, t.d, t.e, t.f}, z, t.q, digits);
}

SeriesResult transform_rhs(const ParamPoint& p, int digits) {
  const TransformArgs t = transform_args(p, digits);
  const BigReal& a = t.a;
  const BigReal& q = t.q;
  const BigReal& l = t.lambda;
  SeriesResult prefactor = products({{a * q, 1, 1},
                                     {a * q / (t.e * t.f), 1, 1},
                                     {l * q / t.e, 1, 1},
                                     {l * q / t.f, 1, 1},
                                     {a * q / t.e, 1, -1},
                                     {a * q / t.f, 1, -1},
                                     {l * q, 1, -1},
                                     {l * q / (t.e * t.f), 1, -1}},
                                    q, digits);
  const SeriesResult series =
      well_poised_8phi7(l, {l * t.b / a, l * t.c / a, l * t.d / a, t.e, t.f}, a * q / (t.e * t.f), q, digits);
  return prefactor * series;
}

void validate_transform(const ParamPoint& p) {
  require_unit_interval(p);
  const R a = p.at("a"), b = p.at("b"), c = p.at("c"), d = p.at("d"), e = p.at("e"), f = p.at("f"), q = p.at("q");
  for (const auto& [name, v] : {std::pair{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"f", f}}) require_nonzero(v, name);
  const R lambda = q * a * a / (b * c * d);
  require_nonzero(lambda, "lambda");
  if (a == R(1) || lambda == R(1)) throw DomainError("well-poised parameter equals 1");
  require_abs_below_one(a * a * q * q / (b * c * d * e * f), "argument a^2q^2/(bcdef)");
  require_abs_below_one(a * q / (e * f), "argument aq/(ef)");
  for (const R& x : {a * q / b, a * q / c, a * q / d, a * q / e, a * q / f, lambda * q / e, lambda * q / f})
    require_no_pole(x, q, "lower parameter");
  for (const R& x : {a * q / e, a * q / f, lambda * q, lambda * q / (e * f)}) require_no_pole(x, q, "denominator product");
}

// ---- 2phi2 summation (after q -> q^2) -------------------------------------

SeriesResult two_phi_two_lhs(const ParamPoint& pt, int d) {
  const BigReal a = big(pt.at("a"), d), b = big(pt.at("b"), d), q = big(pt.at("q"), d);
  const BigReal p = q * q;
  PhiSeriesSpec s{{a * a, b * b}, {a * b * q, -(a * b * q)}, -p, p, std::nullopt};
  SumControl c;
  c.digits = d;
  return phi_series(s, c);
}

SeriesResult two_phi_two_rhs(const ParamPoint& pt, int d) {
  const BigReal a = big(pt.at("a"), d), b = big(pt.at("b"), d), q = big(pt.at("q"), d);
  const BigReal p = q * q;
  // (a^2 p, b^2 p; p^2) / (p, a^2 b^2 p; p^2) with p = q^2, i.e. base q^4
  return products({{a * a * p, 4, 1}, {b * b * p, 4, 1}, {p, 4, -1}, {a * a * b * b * p, 4, -1}}, q, d);
}

// ---- Gasper-Rahman cubic identity, display stored verbatim -----------------

struct Cubic {
  BigReal a2, b, c3, q;
};

Cubic cubic_args(const ParamPoint& p, int d) {
  const BigReal a = big(p.at("a"), d), c = big(p.at("c"), d);
  return {a * a, big(p.at("b"), d), c * c * c, big(p.at("q"), d)};
}

SeriesResult gr_cubic_lhs(const ParamPoint& p, int d) {
  const Cubic x = cubic_args(p, d);
  const BigReal& q = x.q;
  const BigReal& a2 = x.a2;
  const BigReal& b = x.b;
  const BigReal& c3 = x.c3;
  HyperSeriesSpec h;
  h.q = q;
  h.ratio.scale = q;
  h.ratio.numer = {{b, 1, 1}, {q * q / b, 1, 1}, {a2 / q, 2, 1}, {a2, 2, 1}, {c3, 3, 1}, {a2 * q * q / c3, 3, 1}};
  h.ratio.denom = {{a2 * pow(q, 3) / b, 3, 1}, {a2 * b * q, 3, 1}, {q * q, 2, 1},
                   {pow(q, 3), 2, 1},       {a2 * q / c3, 1, 1}, {c3 / q, 1, 1}};
  h.weights = well_poised_weights(a2, 4);
  return sum(h, d);
}

SeriesResult gr_cubic_rhs(const ParamPoint& p, int d) {
  const Cubic x = cubic_args(p, d);
  const BigReal& q = x.q;
  const BigReal& a2 = x.a2;
  const BigReal& b = x.b;
  const BigReal& c3 = x.c3;
  const BigReal a = big(p.at("a"), d);
  const BigReal q2 = q * q, q3 = pow(q, 3), q4 = pow(q, 4);
  const BigReal c6 = c3 * c3;
  const SeriesResult first = products({{b * q2, 3, 1},
                                       {q4 / b, 3, 1},
                                       {b * c3 / q, 3, 1},
                                       {c3 * q / b, 3, 1},
                                       {c3 / a2, 3, 1},
                                       {c3 * q2 / a2, 3, 1},
                                       {a2 * q, 3, 1},
                                       {a2 * q3, 3, 1},
                                       {q2, 3, -1},
                                       {q4, 3, -1},
                                       {c3 * q, 3, -1},
                                       {b * c3 / a2, 3, -1},
                                       {a2 * q3 / b, 3, -1},
                                       {a2 * b * q, 3, -1},
                                       {c3 * q2 / (a2 * b), 3, -1}},
                                      q, d);
  const SeriesResult second = products({{b, 3, 1},
                                        {b * q, 3, 1},
                                        {b * q2, 3, 1},
                                        {q2 / b, 3, 1},
                                        {q3 / b, 3, 1},
                                        {q4 / b, 3, 1},
                                        {a2 / q, 3, 1},
                                        {a2 * q, 3, 1},
                                        {a2 * q3, 3, 1},
                                        {c3 / a2, 3, 1},
                                        {c6 * q / a2, 3, 1},
                                        {q2, 3, -1},
                                        {q4, 3, -1},
                                        {c3 / q, 3, -1},
                                        {c3 * q, 3, -1},
                                        {a2 / c3, 3, -1},
                                        {a2 * q / c3, 3, -1},
                                        {c3 * q3 / a2, 3, -1},
                                        {c3 * q3 / (a2 * b), 3, -1},
                                        {a * a2 * q3 / b, 3, -1},  // a^3 q^3 / b as displayed
                                        {a2 * b * q, 3, -1},
                                        {b * q3 / a2, 3, -1}},
                                       q, d);
  PhiSeriesSpec s{{b * c3 / a2, c3 * q2 / (a2 * b)}, {c6 * q / a2}, q3, q3, std::nullopt};
  SumControl c;
  c.digits = d;
  const SeriesResult phi = phi_series(s, c);
  return first - second * phi;
}

void validate_gr_cubic(const ParamPoint& p) {
  require_unit_interval(p);
  const R a = p.at("a"), b = p.at("b"), c = p.at("c"), q = p.at("q");
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  require_nonzero(c, "c");
  const R a2 = a * a, c3 = c * c * c, q3 = q.pow(3);
  if (a2 == R(1)) throw DomainError("a^2 = 1 makes the well-poised factor singular");
  for (const R& x : {a2 * q3 / b, a2 * b * q}) require_no_pole(x, q3, "lower parameter");
  for (const R& x : {q * q, q.pow(3)}) require_no_pole(x, q, "lower parameter");
  for (const R& x : {a2 * q / c3, c3 / q}) require_no_pole(x, q, "lower parameter");
  require_no_pole(c3 * c3 * q / a2, q3, "2phi1 lower parameter");
  for (const R& x : {c3 * q, b * c3 / a2, c3 * q * q / (a2 * b), c3 / q, a2 / c3, a2 * q / c3, c3 * q3 / a2,
                     c3 * q3 / (a2 * b), a * a2 * q3 / b, b * q3 / a2})
    require_no_pole(x, q3, "denominator product");
}

// ---- Chu's cubic identity: terminating, exact ------------------------------

struct CubicTerminating {
  Rational lhs, rhs;
};

CubicTerminating chu_cubic_terminating(const ParamPoint& p) {
  const R a = p.at("a"), b = p.at("b"), q = p.at("q");
  const long n = p.integer("n");
  const R a2 = a * a, q3 = q.pow(3);
  R lhs(0);
  for (long k = 0; k <= n; ++k) {
    const R num = qpoch_finite(b, q, k) * qpoch_finite(q * q / b, q, k) * qpoch_finite(a2 / q, q, 2 * k) *
                  qpoch_finite(a2 * q.pow(2 + 3 * n), q3, k) * qpoch_finite(q.pow(-3 * n), q3, k);
    const R den = qpoch_finite(a2 * q3 / b, q3, k) * qpoch_finite(a2 * b * q, q3, k) * qpoch_finite(q * q, q, 2 * k) *
                  qpoch_finite(a2 * q.pow(1 + 3 * n), q, k) * qpoch_finite(q.pow(-3 * n - 1), q, k);
    lhs += (R(1) - a2 * q.pow(4 * k)) / (R(1) - a2) * num / den * q.pow(k);
  }
  const R rhs = qpoch_finite(a2 * q, q, 3 * n) * qpoch_finite(q3, q3, n) * qpoch_finite(b * q * q, q3, n) *
                qpoch_finite(q.pow(4) / b, q3, n) /
                (qpoch_finite(q * q, q, 3 * n) * qpoch_finite(a2 * q * q, q3, n) * qpoch_finite(a2 * q3 / b, q3, n) *
                 qpoch_finite(a2 * b * q, q3, n));
  return {lhs, rhs};
}

void validate_chu_cubic_terminating(const ParamPoint& p) {
  require_unit_interval(p);
  const R a = p.at("a"), b = p.at("b");
  const long n = p.integer("n");
  if (n < 0) throw DomainError("n must be non-negative");
  if (n > 200) throw DomainError("n is limited to 200 for exact evaluation");
  require_nonzero(b, "b");
  if (a * a == R(1)) throw DomainError("a^2 = 1 makes the well-poised factor singular");
}

// ---- Chu's cubic identity, n -> infinity -----------------------------------

SeriesResult chu_cubic_limit_lhs(const ParamPoint& p, int d) {
  const BigReal a = big(p.at("a"), d), b = big(p.at("b"), d), q = big(p.at("q"), d);
  const BigReal a2 = a * a;
  HyperSeriesSpec h;
  h.q = q;
  h.ratio.scale = q * q;
  h.ratio.q_step = 2;
  h.ratio.numer = {{b, 1, 1}, {q * q / b, 1, 1}, {a2 / q, 2, 1}, {a2, 2, 1}};
  h.ratio.denom = {{a2 * pow(q, 3) / b, 3, 1}, {a2 * b * q, 3, 1}, {q * q, 2, 1}, {pow(q, 3), 2, 1}};
  h.weights = well_poised_weights(a2, 4);
  return sum(h, d);
}

SeriesResult chu_cubic_limit_rhs(const ParamPoint& p, int d) {
  const BigReal a = big(p.at("a"), d), b = big(p.at("b"), d), q = big(p.at("q"), d);
  const BigReal a2 = a * a, q2 = q * q, q3 = pow(q, 3);
  return products({{a2 * q, 1, 1},
                   {q3, 3, 1},
                   {b * q2, 3, 1},
                   {pow(q, 4) / b, 3, 1},
                   {q2, 1, -1},
                   {a2 * q2, 3, -1},
                   {a2 * q3 / b, 3, -1},
                   {a2 * b * q, 3, -1}},
                  q, d);
}

void validate_chu_cubic_limit(const ParamPoint& p) {
  require_unit_interval(p);
  const R a = p.at("a"), b = p.at("b"), q = p.at("q");
  require_nonzero(b, "b");
  const R a2 = a * a, q3 = q.pow(3);
  if (a2 == R(1)) throw DomainError("a^2 = 1 makes the well-poised factor singular");
  for (const R& x : {a2 * q3 / b, a2 * b * q, a2 * q * q}) require_no_pole(x, q3, "denominator");
}

// ---- Chu's quadratic identity (after q -> q^2) -----------------------------

CubicTerminating chu_quadratic_terminating(const ParamPoint& p) {
  const R a = p.at("a"), u = p.at("u"), v = p.at("v"), q = p.at("q");
  const long n = p.integer("n");
  const R q2 = q * q;
  R lhs(0);
  for (long k = 0; k <= n; ++k) {
    const R num = qpoch_finite(q.pow(-2 * n), q2, k) * qpoch_finite(q.pow(2 * n) * a, q2, k) * qpoch_finite(a / q, q2, k) *
                  qpoch_finite(u / q, q, k) * qpoch_finite(v / q, q, k) * qpoch_finite(q2 * a / (u * v), q, k);
    const R den = qpoch_finite(q2 * a / u, q2, k) * qpoch_finite(q2 * a / v, q2, k) * qpoch_finite(u * v / q, q2, k) *
                  qpoch_finite(q, q, k) * qpoch_finite(a * q.pow(2 * n), q, k) * qpoch_finite(q.pow(-2 * n), q, k);
    lhs += (R(1) - a * q.pow(3 * k - 1)) / (R(1) - a / q) * num / den * q.pow(k);
  }
  const R rhs = qpoch_finite(u, q2, n) * qpoch_finite(v, q2, n) * qpoch_finite(a * q, q2, n) *
                qpoch_finite(a * q.pow(3) / (u * v), q2, n) /
                (qpoch_finite(q, q2, n) * qpoch_finite(q2 * a / u, q2, n) * qpoch_finite(q2 * a / v, q2, n) *
                 qpoch_finite(u * v / q, q2, n));
  return {lhs, rhs};
}

void validate_chu_quadratic(const ParamPoint& p) {
  require_unit_interval(p);
  const R a = p.at("a"), u = p.at("u"), v = p.at("v"), q = p.at("q");
  const long n = p.integer("n");
  if (n < 0) throw DomainError("n must be non-negative");
  if (n > 200) throw DomainError("n is limited to 200 for exact evaluation");
  require_nonzero(u, "u");
  require_nonzero(v, "v");
  if (a == q) throw DomainError("a = q makes the well-poised factor singular");
}

SeriesResult chu_quadratic_limit_series(const BigReal& a, const BigReal& u, const BigReal& v, const BigReal& q, int d) {
  // (1 - a q^{3k-1})/(1 - a/q) (a/q; q^2)_k (u/q, v/q, q^2 a/(uv); q)_k
  //   / ((q^2 a/u, q^2 a/v, uv/q; q^2)_k (q; q)_k) q^{k(k+1)/2}
  HyperSeriesSpec h;
  h.q = q;
  h.ratio.scale = q;
  h.ratio.q_step = 1;
  h.ratio.numer = {{a / q, 2, 1}, {u / q, 1, 1}, {v / q, 1, 1}, {q * q * a / (u * v), 1, 1}};
  h.ratio.denom = {{q * q * a / u, 2, 1}, {q * q * a / v, 2, 1}, {u * v / q, 2, 1}, {q, 1, 1}};
  h.weights = well_poised_weights(a / q, 3);
  return sum(h, d);
}

SeriesResult chu_quadratic_limit_lhs(const ParamPoint& p, int d) {
  return chu_quadratic_limit_series(big(p.at("a"), d), big(p.at("u"), d), big(p.at("v"), d), big(p.at("q"), d), d);
}

SeriesResult chu_quadratic_limit_rhs(const ParamPoint& p, int d) {
  const BigReal a = big(p.at("a"), d), u = big(p.at("u"), d), v = big(p.at("v"), d), q = big(p.at("q"), d);
  const BigReal q2 = q * q;
  return products({{u, 2, 1},
                   {v, 2, 1},
                   {a * q, 2, 1},
                   {a * pow(q, 3) / (u * v), 2, 1},
                   {q, 2, -1},
                   {q2 * a / u, 2, -1},
                   {q2 * a / v, 2, -1},
                   {u * v / q, 2, -1}},
                  q, d);
}

void validate_chu_quadratic_limit(const ParamPoint& p) {
  require_unit_interval(p);
  const R a = p.at("a"), u = p.at("u"), v = p.at("v"), q = p.at("q");
  require_nonzero(u, "u");
  require_nonzero(v, "v");
  if (a == q) throw DomainError("a = q makes the well-poised factor singular");
  const R q2 = q * q;
  for (const R& x : {q2 * a / u, q2 * a / v, u * v / q}) require_no_pole(x, q2, "denominator");
}

// ---- small displays after specialisation ------------------------------------

SeriesResult two_phi_two_special_lhs(const BigReal& q, int d) {
  // (q^2;q^2)_k / ((q^3;q^2)_k (-q^3;q^2)_k) q^{k(k+1)}
  HyperSeriesSpec h;
  h.q = q;
  h.ratio.scale = q * q;
  h.ratio.q_step = 2;
  h.ratio.numer = {{q * q, 2, 1}};
  h.ratio.denom = {{pow(q, 3), 2, 1}, {-pow(q, 3), 2, 1}};
  return sum(h, d);
}

SeriesResult thm_b_bridge_rhs(const BigReal& q, int d) {
  // (q;q^2)^2 (-q^2;q^2)^2 / ((-q;q^2)^2 (q^2;q^2)^2) times the alternating cubic series
  const SeriesResult factor = products({{q, 2, 2}, {-(q * q), 2, 2}, {-q, 2, -2}, {q * q, 2, -2}}, q, d);
  return factor * sun_series(q, d);
}

auto q_only(SeriesResult (*f)(const BigReal&, int)) {
  return [f](const ParamPoint& p, int d) { return SideValue::from_series(f(big(p.at("q"), d), d)); };
}

auto from_point(SeriesResult (*f)(const ParamPoint&, int)) {
  return [f](const ParamPoint& p, int d) { return SideValue::from_series(f(p, d)); };
}

}  // namespace

void add_proof_chain(std::vector<IdentityRecord>& out) {
  const ParamSpec q_spec{"q", "0 < q < 1"};
  {
    IdentityRecord r = chain_record("8phi7-sum", "summation formula for ${_8\\phi_7}$-series",
                                    "8W7(-c; a, q/a, c, -d, -q/d; q, c) = (-c,-cq;q)(acd,acq/d,cdq/a,cq^2/ad;q^2)/"
                                    "(cd,cq/d,-ac,-cq/a;q)",
                                    {{"a", "nonzero"}, {"c", "0 < |c| < 1"}, {"d", "nonzero"}, q_spec});
    r.default_points = {{{"a", R(1, 3)}, {"c", R(2, 5)}, {"d", R(1, 2)}, {"q", R(1, 2)}},
                        {{"a", R(3, 5)}, {"c", R(-1, 3)}, {"d", R(2, 5)}, {"q", R(1, 4)}},
                        {{"a", R(1, 2)}, {"c", R(1, 2)}, {"d", R(3, 5)}, {"q", R(3, 4)}}};
    r.validate = validate_eight_phi_seven_sum;
    r.lhs = from_point(eight_phi_seven_sum_lhs);
    r.rhs = from_point(eight_phi_seven_sum_rhs);
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("5phi4-special", "Fix $a=q^{\\frac{1}{2}}$, $c=-q$, $d=-q^{\\frac{1}{2}}$",
                                    "5phi4(q^2,-q^3,q,q,q; -q,q^3,q^3,q^3; q^2, -q^2) = (q^2,q^4;q^2)(q^4;q^4)^4/(q^3;q^2)^4",
                                    {q_spec});
    r.uses_q_grid = true;
    r.validate = [](const ParamPoint& p) { require_unit_interval(p); };
    r.lhs = q_only(five_phi_four_lhs);
    r.rhs = q_only(five_phi_four_rhs);
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record(
        "8phi7-transform", "A transformation formula for $_8\\phi_7$-series",
        "8W7(a; b,c,d,e,f; q, a^2q^2/bcdef) = (aq,aq/ef,lq/e,lq/f;q)/(aq/e,aq/f,lq,lq/ef;q) 8W7(l; lb/a,lc/a,ld/a,e,f; q, aq/ef), "
        "l = qa^2/bcd",
        {{"a", "nonzero"}, {"b", "nonzero"}, {"c", "nonzero"}, {"d", "nonzero"}, {"e", "nonzero"}, {"f", "nonzero"}, q_spec});
    r.default_points = {
        {{"a", R(1, 2)}, {"b", R(3, 2)}, {"c", R(3, 2)}, {"d", R(3, 2)}, {"e", R(2)}, {"f", R(2)}, {"q", R(1, 2)}},
        {{"a", R(1, 3)}, {"b", R(2)}, {"c", R(5, 2)}, {"d", R(3)}, {"e", R(3, 2)}, {"f", R(4, 3)}, {"q", R(3, 5)}},
        // a = q, b = -q, c = d = e = f = q^(1/2) at q = 1/4
        {{"a", R(1, 4)}, {"b", R(-1, 4)}, {"c", R(1, 2)}, {"d", R(1, 2)}, {"e", R(1, 2)}, {"f", R(1, 2)}, {"q", R(1, 4)}}};
    r.validate = validate_transform;
    r.lhs = from_point(transform_lhs);
    r.rhs = from_point(transform_rhs);
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("thm-b-bridge", "Substituting $q^2$ for $q$ in the last equation",
                                    "sum (1+q^{4k+2}) q^{2k}/((1+q^{2k+1})^2(1-q^{2k+1})^2) = "
                                    "(q;q^2)^2(-q^2;q^2)^2/((-q;q^2)^2(q^2;q^2)^2) sum (-1)^n q^{2n}(1+q^{2n+1})/(1-q^{2n+1})^3",
                                    {q_spec});
    r.uses_q_grid = true;
    r.validate = [](const ParamPoint& p) { require_unit_interval(p); };
    r.lhs = q_only(thm_b_series);
    r.rhs = q_only(thm_b_bridge_rhs);
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("2phi2-sum", "summation formula for ${_2\\phi_2}$-series",
                                    "2phi2(a^2, b^2; abq, -abq; q^2, -q^2) = (a^2q^2, b^2q^2; q^4)/(q^2, a^2b^2q^2; q^4)",
                                    {{"a", "real"}, {"b", "real"}, q_spec});
    r.default_points = {{{"a", R(1, 3)}, {"b", R(2, 5)}, {"q", R(1, 2)}},
                        {{"a", R(1, 2)}, {"b", R(3, 5)}, {"q", R(1, 4)}},
                        {{"a", R(3, 5)}, {"b", R(1, 3)}, {"q", R(3, 4)}}};
    r.validate = [](const ParamPoint& p) {
      require_unit_interval(p);
      const R ab = p.at("a") * p.at("b") * p.at("q");
      require_no_pole(ab, p.at("q") * p.at("q"), "lower parameter abq");
      require_no_pole(-ab, p.at("q") * p.at("q"), "lower parameter -abq");
      require_no_pole(p.at("a") * p.at("a") * p.at("b") * p.at("b") * p.at("q") * p.at("q"), p.at("q").pow(4), "denominator");
    };
    r.lhs = from_point(two_phi_two_lhs);
    r.rhs = from_point(two_phi_two_rhs);
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("2phi2-special", "Take $a=b=q^{\\frac{1}{2}}$ to attain",
                                    "sum (q^2;q^2)_k/((q^3;q^2)_k(-q^3;q^2)_k) q^{k(k+1)} = (q^4;q^4)^2/(q^2,q^6;q^4)", {q_spec});
    r.uses_q_grid = true;
    r.validate = [](const ParamPoint& p) { require_unit_interval(p); };
    r.lhs = q_only(two_phi_two_special_lhs);
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = big(p.at("q"), d);
      return SideValue::from_series(products({{pow(q, 4), 4, 2}, {q * q, 4, -1}, {pow(q, 6), 4, -1}}, q, d));
    };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("gr-cubic", "Gasper and Rahman's identity",
                                    "nonterminating cubic summation with a 2phi1 correction term (display stored verbatim, "
                                    "including the factor (a^3q^3/b;q^3) in the second denominator)",
                                    {{"a", "nonzero, a^2 != 1"}, {"b", "nonzero"}, {"c", "nonzero"}, q_spec});
    r.default_points = {{{"a", R(1, 3)}, {"b", R(2, 5)}, {"c", R(1, 2)}, {"q", R(1, 2)}},
                        {{"a", R(1, 2)}, {"b", R(1, 3)}, {"c", R(3, 5)}, {"q", R(1, 4)}},
                        {{"a", R(3, 5)}, {"b", R(1, 2)}, {"c", R(2, 5)}, {"q", R(3, 4)}}};
    r.validate = validate_gr_cubic;
    r.lhs = from_point(gr_cubic_lhs);
    r.rhs = from_point(gr_cubic_rhs);
    r.display_sensitive = true;
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("chu-cubic-terminating", "The terminating form of it due to Chu",
                                    "terminating cubic sum over k <= n equal to a ratio of finite q-shifted factorials",
                                    {{"a", "a^2 != 1"}, {"b", "nonzero"}, q_spec, {"n", "integer 0 <= n <= 200"}});
    r.default_points = {{{"a", R(1, 2)}, {"b", R(1, 3)}, {"q", R(2, 5)}, {"n", R(6)}},
                        {{"a", R(1, 3)}, {"b", R(2, 5)}, {"q", R(1, 2)}, {"n", R(4)}},
                        {{"a", R(3, 5)}, {"b", R(1, 2)}, {"q", R(1, 4)}, {"n", R(8)}}};
    r.validate = validate_chu_cubic_terminating;
    r.lhs = [](const ParamPoint& p, int d) { return SideValue::from_exact(chu_cubic_terminating(p).lhs, d); };
    r.rhs = [](const ParamPoint& p, int d) { return SideValue::from_exact(chu_cubic_terminating(p).rhs, d); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("chu-cubic-limit", "Let $n\\to \\infty$ to get",
                                    "sum (1-a^2q^{4k})/(1-a^2) (b,q^2/b;q)_k (a^2/q;q)_{2k}/((a^2q^3/b,a^2bq;q^3)_k (q^2;q)_{2k}) "
                                    "q^{k^2+k} = (a^2q;q)(q^3,bq^2,q^4/b;q^3)/((q^2;q)(a^2q^2,a^2q^3/b,a^2bq;q^3))",
                                    {{"a", "a^2 != 1"}, {"b", "nonzero"}, q_spec});
    r.default_points = {{{"a", R(1, 2)}, {"b", R(1, 3)}, {"q", R(1, 2)}},
                        {{"a", R(1, 3)}, {"b", R(2, 5)}, {"q", R(1, 4)}},
                        {{"a", R(3, 5)}, {"b", R(1, 2)}, {"q", R(3, 4)}}};
    r.validate = validate_chu_cubic_limit;
    r.lhs = from_point(chu_cubic_limit_lhs);
    r.rhs = from_point(chu_cubic_limit_rhs);
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("chu-quadratic", "Recall Chu's identity",
                                    "terminating quadratic sum over k <= n (base q^2 with half-steps in q) equal to "
                                    "(u,v,aq,aq^3/uv;q^2)_n/(q,q^2a/u,q^2a/v,uv/q;q^2)_n",
                                    {{"a", "a != q"}, {"u", "nonzero"}, {"v", "nonzero"}, q_spec, {"n", "integer 0 <= n <= 200"}});
    r.default_points = {{{"a", R(1, 3)}, {"u", R(2, 5)}, {"v", R(1, 2)}, {"q", R(1, 2)}, {"n", R(5)}},
                        {{"a", R(1, 2)}, {"u", R(3, 5)}, {"v", R(1, 3)}, {"q", R(1, 4)}, {"n", R(4)}},
                        {{"a", R(2, 5)}, {"u", R(1, 2)}, {"v", R(3, 5)}, {"q", R(3, 4)}, {"n", R(6)}}};
    r.validate = validate_chu_quadratic;
    r.lhs = [](const ParamPoint& p, int d) { return SideValue::from_exact(chu_quadratic_terminating(p).lhs, d); };
    r.rhs = [](const ParamPoint& p, int d) { return SideValue::from_exact(chu_quadratic_terminating(p).rhs, d); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("chu-quadratic-limit", "The case $n\\to \\infty$ of it reads",
                                    "sum (1-aq^{3k-1})/(1-a/q) (a/q;q^2)_k (u/q,v/q,q^2a/uv;q)_k/((q^2a/u,q^2a/v,uv/q;q^2)_k (q;q)_k) "
                                    "q^{k(k+1)/2} = (u,v,aq,aq^3/uv;q^2)/(q,q^2a/u,q^2a/v,uv/q;q^2)",
                                    {{"a", "a != q"}, {"u", "nonzero"}, {"v", "nonzero"}, q_spec});
    r.default_points = {{{"a", R(1, 3)}, {"u", R(2, 5)}, {"v", R(1, 2)}, {"q", R(1, 2)}},
                        {{"a", R(1, 2)}, {"u", R(3, 5)}, {"v", R(1, 3)}, {"q", R(1, 4)}},
                        {{"a", R(2, 5)}, {"u", R(1, 2)}, {"v", R(3, 5)}, {"q", R(3, 4)}}};
    r.validate = validate_chu_quadratic_limit;
    r.lhs = from_point(chu_quadratic_limit_lhs);
    r.rhs = from_point(chu_quadratic_limit_rhs);
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = chain_record("chu-quadratic-special", "Set $a=q^{\\frac{3}{2}}$, $u=v=q$",
                                    "sum (1-q^{3k+2})/(1-q^2) (q^2;q^2)_k (q;q)_k^2/(q^3;q^2)_k^3 q^{k(k+1)/2} = "
                                    "(q^4;q^2)(q^2;q^2)^3/((q;q^2)(q^3;q^2)^3)",
                                    {q_spec});
    r.uses_q_grid = true;
    r.validate = [](const ParamPoint& p) { require_unit_interval(p); };
    r.lhs = q_only(thm_e_series);
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = big(p.at("q"), d);
      return SideValue::from_series(
          products({{pow(q, 4), 2, 1}, {q * q, 2, 3}, {q, 2, -1}, {pow(q, 3), 2, -3}}, q, d));
    };
    out.push_back(std::move(r));
  }
}

}  // namespace qpi::catalog
