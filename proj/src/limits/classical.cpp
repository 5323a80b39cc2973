#include <array>

#include "qpi/errors.hpp"
#include "qpi/limits.hpp"
#include "qpi/telescoping.hpp"

namespace qpi::limits {

std::string_view to_string(TailKind kind) {
  switch (kind) {
    case TailKind::alternating: return "alternating";
    case TailKind::integral: return "integral";
    case TailKind::geometric: return "geometric";
    case TailKind::gautschi: return "gautschi";
  }
  return "unknown";
}

namespace {

using R = Rational;

BigReal big(const Rational& r, int digits) { return to_bigreal(r, std::max(digits, BigReal::kMinDigits)); }
BigReal num(long v, int digits) { return big(Rational(v), digits); }

/// A partial sum with the omitted remainder known to lie in [lo, hi].
struct Partial {
  BigReal sum;
  BigReal lo;
  BigReal hi;
  long terms = 0;

  [[nodiscard]] SeriesResult result() const {
    const BigReal h = BigReal(1) / BigReal(2);
    SeriesResult r;
    r.value = sum + (lo + hi) * h;
    r.terms_used = static_cast<std::size_t>(terms);
    r.bound = {abs(hi - lo) * h, BoundKind::truncation};
    return r;
  }
};

void require_terms(long n, long minimum = 1) {
  if (n < minimum) throw DomainError("term count N must be at least " + std::to_string(minimum));
}

// ---- monotone sums with integral brackets --------------------------------

Partial inverse_power_sum(long n, int power, int digits) {
  // sum_{k=1}^N k^-p; by convexity the tail lies between the integrals from
  // N+1 and from N+1/2.
  require_terms(n);
  BigReal s = num(0, digits);
  for (long k = n; k >= 1; --k) s += BigReal(1) / pow(num(k, digits), power);
  const BigReal p1 = num(power - 1, digits);
  const BigReal lo = BigReal(1) / (p1 * pow(num(n + 1, digits), power - 1));
  const BigReal hi = BigReal(1) / (p1 * pow(big(R(2 * n + 1, 2), digits), power - 1));
  return {s, lo, hi, n};
}

Partial alternating_cubes(long n, int digits) {
  // sum_{k<N} (-1)^k/(2k+1)^3; the remainder lies between 0 and the first omitted term.
  require_terms(n);
  BigReal s = num(0, digits);
  for (long k = n - 1; k >= 0; --k) {
    const BigReal t = BigReal(1) / pow(num(2 * k + 1, digits), 3);
    s += (k % 2 == 0) ? t : -t;
  }
  BigReal next = BigReal(1) / pow(num(2 * n + 1, digits), 3);
  if (n % 2 == 1) next = -next;
  const BigReal zero = num(0, digits);
  return next.sign() >= 0 ? Partial{s, zero, next, n} : Partial{s, next, zero, n};
}

// ---- ratio-bounded sums ------------------------------------------------------

/// sum_{k<N} H_k w(k) with H_0 = 1 and H_{k+1} = H_k ratio(k). Every later
/// term ratio is below rho in modulus, so the remainder is at most |t_N|/(1-rho).
template <class Ratio, class Weight>
Partial ratio_sum(long n, int digits, Ratio ratio, Weight weight, const Rational& rho) {
  require_terms(n);
  BigReal h = num(1, digits);
  BigReal s = num(0, digits);
  for (long k = 0; k < n; ++k) {
    const BigReal kb = num(k, digits);
    s += h * weight(kb);
    h *= ratio(kb);
  }
  const BigReal b = abs(h * weight(num(n, digits))) / (BigReal(1) - big(rho, digits));
  return {s, -b, b, n};
}

// ---- sine-product forms ------------------------------------------------------

BigReal horner(const std::vector<BigReal>& c, const BigReal& x) {
  BigReal v(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

struct SineSetup {
  SineForm form = SineForm::product;
  std::vector<BigReal> x;
  /// The brace as a polynomial in K, lowest power first:
  /// product form prod(K + x(1-x)) - K^m with K = k(k+1);
  /// reciprocal form K^m - prod(K - (1-x)^2) with K = (k+1)^2.
  std::vector<BigReal> brace;
  BigReal reflection;  // prod Gamma(x_i) Gamma(1 - x_i)
  int m = 0;
};

SineSetup sine_setup(std::span<const Rational> xs, SineForm form, int digits) {
  if (xs.empty()) throw DomainError("sine-product form needs at least one parameter");
  SineSetup s;
  s.form = form;
  s.m = static_cast<int>(xs.size());
  s.reflection = num(1, digits);
  std::vector<BigReal> roots;  // prod(K + a) = K^m prod(1 - (-a)/K)
  for (const Rational& x : xs) {
    if (!(x.sign() > 0 && x < Rational(1))) throw DomainError("sine-product parameters must lie in (0,1), got " + x.str());
    const BigReal v = big(x, digits);
    s.x.push_back(v);
    s.reflection *= gamma(v) * gamma(BigReal(1) - v);
    roots.push_back(form == SineForm::product ? -(v * (BigReal(1) - v)) : pow(BigReal(1) - v, 2));
  }
  // product_coefficients gives prod(1 - r t) = sum_j c_j t^j, so
  // prod(K - r) = sum_j c_j K^{m-j}.
  const std::vector<BigReal> c = telescoping::product_coefficients<BigReal>(roots);
  s.brace.assign(c.rbegin(), c.rend());
  s.brace.pop_back();  // drop K^m
  if (form == SineForm::reciprocal) {
    for (BigReal& v : s.brace) v = -v;
  }
  return s;
}

BigReal brace_at(const SineSetup& s, const BigReal& k) {
  const BigReal K = s.form == SineForm::product ? k * (k + BigReal(1)) : pow(k + BigReal(1), 2);
  return horner(s.brace, K);
}

/// Initial term H_0 and ratio H_{k+1}/H_k of the hypergeometric part.
BigReal sine_first(const SineSetup& s, int digits) {
  BigReal h = num(1, digits);
  if (s.form == SineForm::reciprocal) {
    for (const BigReal& x : s.x) h /= x * (BigReal(1) - x) * (BigReal(2) - x);
  }
  return h;
}

BigReal sine_ratio(const SineSetup& s, const BigReal& k) {
  const BigReal k1 = k + BigReal(1);
  if (s.form == SineForm::product) {
    BigReal r = BigReal(1) / (pow(k1, s.m) * pow(k + BigReal(2), s.m));
    for (const BigReal& x : s.x) r *= (k + x) * (k1 - x);
    return r;
  }
  BigReal r = pow(k1, 2 * s.m);
  for (const BigReal& x : s.x) r /= (k1 + x) * (k + BigReal(3) - x);
  return r;
}

BigReal sine_leading(const SineSetup& s, int digits) {
  if (s.form == SineForm::product) return num(0, digits);
  BigReal lead = num(1, digits);
  for (const BigReal& x : s.x) lead /= BigReal(1) - x;
  return lead;
}

/// Lower and upper envelopes of the summand without the reflection constant,
/// from Gautschi's inequality x^{1-s} < Gamma(x+1)/Gamma(x+s) < (x+1)^{1-s}.
std::pair<BigReal, BigReal> envelopes(const SineSetup& s, const BigReal& k) {
  const BigReal br = brace_at(s, k);
  const BigReal k1 = k + BigReal(1);
  if (s.form == SineForm::product) {
    // (x)_k (1-x)_k / k!^2 lies between 1/(k+1) and 1/k, over Gamma(x)Gamma(1-x)
    return {br / pow(k1, 2 * s.m), br / (pow(k, s.m) * pow(k1, s.m))};
  }
  // k!^2 / ((x)_{k+1} (1-x)_{k+2}) lies between 1/((k+1)(k+2-x)) and
  // (k+2)/((k+1)^2 (k+2-x)), times Gamma(x)Gamma(1-x)
  BigReal lo = br;
  BigReal hi = br * pow(k + BigReal(2), s.m);
  for (const BigReal& x : s.x) {
    const BigReal d = k + BigReal(2) - x;
    lo /= k1 * d;
    hi /= k1 * k1 * d;
  }
  return {lo, hi};
}

/// int_a^inf f(k) dk as int_0^{1/a} f(1/u)/u^2 du by 10-point Gauss-Legendre.
/// The integrand is analytic near [0, 1/a] and the interval is short.
template <class F>
BigReal tail_integral(F f, const BigReal& a) {
  static constexpr std::array<const char*, 5> nodes{"0.1488743389816312108848260", "0.4333953941292471907992659",
                                                    "0.6794095682990244062343274", "0.8650633666889845107320967",
                                                    "0.9739065285171717200779640"};
  static constexpr std::array<const char*, 5> weights{"0.2955242247147528701738930", "0.2692667193099963550912269",
                                                      "0.2190863625159820439955349", "0.1494513491505805931457763",
                                                      "0.0666713443086881375935688"};
  const int d = a.digits();
  const BigReal half_width = BigReal(1) / (BigReal(2) * a);
  BigReal total = num(0, d);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const BigReal node = BigReal::parse(nodes[i], d);
    const BigReal w = BigReal::parse(weights[i], d);
    for (const BigReal& u : {half_width * (BigReal(1) - node), half_width * (BigReal(1) + node)}) {
      total += w * f(BigReal(1) / u) / (u * u);
    }
  }
  return total * half_width;
}

/// Bracket of sum_{k>=N} t_k. The envelopes decrease for k >= 15, so the sum
/// lies between the lower envelope's integral from N and the upper's from N-1.
std::pair<BigReal, BigReal> sine_tail(const SineSetup& s, long n, int digits) {
  require_terms(n, 16);
  const BigReal c = s.form == SineForm::product ? BigReal(1) / s.reflection : s.reflection;
  const BigReal nb = num(n, digits);
  BigReal lo = c * tail_integral([&](const BigReal& k) { return envelopes(s, k).first; }, nb);
  BigReal hi = c * tail_integral([&](const BigReal& k) { return envelopes(s, k).second; }, nb - BigReal(1));
  // 25-digit quadrature constants and 10-point truncation: widen by 1e-20 relative.
  const BigReal slack = abs(hi) * BigReal::pow10(-20, digits);
  return {lo - slack, hi + slack};
}

BigReal sine_partial(const SineSetup& s, long n, int digits) {
  BigReal h = sine_first(s, digits);
  BigReal sum = sine_leading(s, digits);
  for (long k = 0; k < n; ++k) {
    const BigReal kb = num(k, digits);
    sum += h * brace_at(s, kb);
    h *= sine_ratio(s, kb);
  }
  return sum;
}

// Displayed forms of the two-parameter identities.

Partial wei_a(const Rational& xr, const Rational& yr, long n, int digits) {
  const std::vector<Rational> xs{xr, yr};
  const SineSetup s = sine_setup(xs, SineForm::product, digits);
  const BigReal x = s.x[0], y = s.x[1];
  const BigReal lin = x + y - x * x - y * y;
  const BigReal cst = x * y * (BigReal(1) - x) * (BigReal(1) - y);
  BigReal h = num(1, digits);
  BigReal sum = num(0, digits);
  for (long k = 0; k < n; ++k) {
    const BigReal kb = num(k, digits);
    sum += h * ((kb * kb + kb) * lin + cst);
    h *= sine_ratio(s, kb);
  }
  const auto [lo, hi] = sine_tail(s, n, digits);
  return {sum, lo, hi, n};
}

Partial wei_b(const Rational& xr, const Rational& yr, long n, int digits) {
  const std::vector<Rational> xs{xr, yr};
  const SineSetup s = sine_setup(xs, SineForm::reciprocal, digits);
  const BigReal x = s.x[0], y = s.x[1];
  const BigReal lin = BigReal(2) - BigReal(2) * x - BigReal(2) * y + x * x + y * y;
  const BigReal cst = BigReal(1) - x * y * (BigReal(2) - x) * (BigReal(2) - y);
  BigReal h = sine_first(s, digits);
  BigReal sum = BigReal(1) / ((BigReal(1) - x) * (BigReal(1) - y));
  for (long k = 0; k < n; ++k) {
    const BigReal kb = num(k, digits);
    sum += h * ((kb * kb + BigReal(2) * kb) * lin + cst);
    h *= sine_ratio(s, kb);
  }
  const auto [lo, hi] = sine_tail(s, n, digits);
  return {sum, lo, hi, n};
}

Partial guillera_b(long n, int digits) {
  // (1/2)_k^4 / (k!^2 (k+1)!^2) (k^2 + k + 1/8): twice the product form at x = y = 1/2.
  const std::vector<Rational> xs{R(1, 2), R(1, 2)};
  const SineSetup s = sine_setup(xs, SineForm::product, digits);
  const BigReal eighth = big(R(1, 8), digits);
  BigReal h = num(1, digits);
  BigReal sum = num(0, digits);
  for (long k = 0; k < n; ++k) {
    const BigReal kb = num(k, digits);
    sum += h * (kb * kb + kb + eighth);
    h *= sine_ratio(s, kb);
  }
  const auto [lo, hi] = sine_tail(s, n, digits);
  return {sum, BigReal(2) * lo, BigReal(2) * hi, n};
}

ClassicalFormula formula(std::string id, std::string anchor, std::string summary, std::string target_text, TailKind tail,
                         int tol_exp, std::vector<std::string> params, std::vector<ParamPoint> points,
                         std::function<Partial(const ParamPoint&, long, int)> eval,
                         std::function<BigReal(const ParamPoint&, int)> target) {
  ClassicalFormula f;
  f.id = std::move(id);
  f.anchor = std::move(anchor);
  f.summary = std::move(summary);
  f.target_text = std::move(target_text);
  f.tail = tail;
  f.tolerance_exponent = tol_exp;
  f.params = std::move(params);
  f.default_points = std::move(points);
  f.partial = [eval](const ParamPoint& p, long n, int d) { return eval(p, n, d).result(); };
  f.partial_sum = [eval](const ParamPoint& p, long n, int d) { return eval(p, n, d).sum; };
  f.target = std::move(target);
  return f;
}

BigReal pi_at(int d) { return BigReal::pi(std::max(d, BigReal::kMinDigits)); }

std::vector<ClassicalFormula> build() {
  const std::string recall = "Recall three simple $\\pi$-formulas";
  const std::string five = "there exist five interesting results";
  const std::string ramanujan = "which are $q$-analogues of two formulas due to Ramanujan";
  const auto half_cubed = [](int d) {
    const BigReal h = big(R(1, 2), d);
    return [h](const BigReal& k) { return pow((k + h) / (k + BigReal(1)), 3); };
  };
  std::vector<ClassicalFormula> out;
  out.push_back(formula(
      "pi-a", recall, "sum_{k>=1} 1/k^2 = pi^2/6", "pi^2/6", TailKind::integral, -5, {}, {{{"N", R(100000)}}},
      [](const ParamPoint&, long n, int d) { return inverse_power_sum(n, 2, d); },
      [](const ParamPoint&, int d) { return pow(pi_at(d), 2) / BigReal(6); }));
  out.push_back(formula(
      "pi-b", recall, "sum_{k>=0} (-1)^k/(2k+1)^3 = pi^3/32", "pi^3/32", TailKind::alternating, -12, {},
      {{{"N", R(10000)}}}, [](const ParamPoint&, long n, int d) { return alternating_cubes(n, d); },
      [](const ParamPoint&, int d) { return pow(pi_at(d), 3) / BigReal(32); }));
  out.push_back(formula(
      "pi-c", recall, "sum_{k>=1} 1/k^4 = pi^4/90", "pi^4/90", TailKind::integral, -12, {}, {{{"N", R(10000)}}},
      [](const ParamPoint&, long n, int d) { return inverse_power_sum(n, 4, d); },
      [](const ParamPoint&, int d) { return pow(pi_at(d), 4) / BigReal(90); }));
  out.push_back(formula(
      "weisstein-a", five, "sum k!/(3/2)_k 2^-k = pi/2", "pi/2", TailKind::geometric, -30, {}, {{{"N", R(150)}}},
      [](const ParamPoint&, long n, int d) {
        // ratio (k+1)/(2k+3) < 1/2
        return ratio_sum(
            n, d, [](const BigReal& k) { return (k + BigReal(1)) / (BigReal(2) * k + BigReal(3)); },
            [](const BigReal&) { return BigReal(1); }, R(1, 2));
      },
      [](const ParamPoint&, int d) { return pi_at(d) / BigReal(2); }));
  out.push_back(formula(
      "weisstein-b", five, "sum k!/(3/2)_k 4^-k = 2pi/(3 sqrt 3)", "2*pi/(3*sqrt(3))", TailKind::geometric, -30, {},
      {{{"N", R(120)}}},
      [](const ParamPoint&, long n, int d) {
        // ratio (k+1)/(4k+6) < 1/4
        return ratio_sum(
            n, d, [](const BigReal& k) { return (k + BigReal(1)) / (BigReal(4) * k + BigReal(6)); },
            [](const BigReal&) { return BigReal(1); }, R(1, 4));
      },
      [](const ParamPoint&, int d) { return BigReal(2) * pi_at(d) / (BigReal(3) * sqrt(num(3, d))); }));
  out.push_back(formula(
      "guillera-a", five, "sum k!^3/(3/2)_k^3 (3k+2)/4^k = pi^2/4", "pi^2/4", TailKind::geometric, -30, {},
      {{{"N", R(120)}}},
      [](const ParamPoint&, long n, int d) {
        // t_{k+1}/t_k = ((k+1)/(k+3/2))^3 (3k+5)/(4(3k+2)) < 1/4
        const BigReal h = big(R(3, 2), d);
        return ratio_sum(
            n, d, [h](const BigReal& k) { return pow((k + BigReal(1)) / (k + h), 3) / BigReal(4); },
            [](const BigReal& k) { return BigReal(3) * k + BigReal(2); }, R(1, 4));
      },
      [](const ParamPoint&, int d) { return pow(pi_at(d), 2) / BigReal(4); }));
  out.push_back(formula(
      "wei-a", five,
      "sin(pi x) sin(pi y)/pi^2 = sum (x)_k(1-x)_k(y)_k(1-y)_k/(k!^2(k+1)!^2) {(k^2+k)(x+y-x^2-y^2)+xy(1-x)(1-y)}",
      "sin(pi*x)*sin(pi*y)/pi^2", TailKind::gautschi, -5, {"x", "y"},
      {{{"x", R(1, 3)}, {"y", R(1, 4)}, {"N", R(100000)}}, {{"x", R(1, 2)}, {"y", R(2, 5)}, {"N", R(100000)}}},
      [](const ParamPoint& p, long n, int d) { return wei_a(p.at("x"), p.at("y"), n, d); },
      [](const ParamPoint& p, int d) {
        const std::vector<Rational> xs{p.at("x"), p.at("y")};
        return sine_product_target(xs, SineForm::product, d);
      }));
  out.push_back(formula(
      "wei-b", five,
      "pi^2/(sin(pi x) sin(pi y)) = 1/((1-x)(1-y)) + sum k!^4/((x)_{k+1}(1-x)_{k+2}(y)_{k+1}(1-y)_{k+2}) "
      "{(k^2+2k)(2-2x-2y+x^2+y^2)+1-xy(2-x)(2-y)}",
      "pi^2/(sin(pi*x)*sin(pi*y))", TailKind::gautschi, -5, {"x", "y"},
      {{{"x", R(1, 3)}, {"y", R(1, 4)}, {"N", R(100000)}}, {{"x", R(1, 2)}, {"y", R(1, 2)}, {"N", R(100000)}}},
      [](const ParamPoint& p, long n, int d) { return wei_b(p.at("x"), p.at("y"), n, d); },
      [](const ParamPoint& p, int d) {
        const std::vector<Rational> xs{p.at("x"), p.at("y")};
        return sine_product_target(xs, SineForm::reciprocal, d);
      }));
  out.push_back(formula(
      "guillera-b", "is exactly the result of Guillera", "2/pi^2 = sum (1/2)_k^4/(k!^2(k+1)!^2) {k^2+k+1/8}", "2/pi^2",
      TailKind::gautschi, -5, {}, {{{"N", R(100000)}}},
      [](const ParamPoint&, long n, int d) { return guillera_b(n, d); },
      [](const ParamPoint&, int d) { return BigReal(2) / pow(pi_at(d), 2); }));
  out.push_back(formula(
      "ramanujan-a", ramanujan, "sum (6k+1)(1/2)_k^3/(k!^3 4^k) = 4/pi", "4/pi", TailKind::geometric, -30, {},
      {{{"N", R(60)}}},
      [half_cubed](const ParamPoint&, long n, int d) {
        // t_{k+1}/t_k = ((k+1/2)/(k+1))^3 (6k+7)/(4(6k+1)) < 1/4
        const auto cube = half_cubed(d);
        return ratio_sum(
            n, d, [cube](const BigReal& k) { return cube(k) / BigReal(4); },
            [](const BigReal& k) { return BigReal(6) * k + BigReal(1); }, R(1, 4));
      },
      [](const ParamPoint&, int d) { return BigReal(4) / pi_at(d); }));
  out.push_back(formula(
      "ramanujan-b", ramanujan, "sum (-1)^k (6k+1)(1/2)_k^3/(k!^3 8^k) = 2 sqrt 2/pi", "2*sqrt(2)/pi",
      TailKind::geometric, -30, {}, {{{"N", R(60)}}},
      [half_cubed](const ParamPoint&, long n, int d) {
        // |t_{k+1}/t_k| < 1/8
        const auto cube = half_cubed(d);
        return ratio_sum(
            n, d, [cube](const BigReal& k) { return -cube(k) / BigReal(8); },
            [](const BigReal& k) { return BigReal(6) * k + BigReal(1); }, R(1, 8));
      },
      [](const ParamPoint&, int d) { return BigReal(2) * sqrt(num(2, d)) / pi_at(d); }));
  return out;
}

}  // namespace

const std::vector<ClassicalFormula>& classical_formulas() {
  static const std::vector<ClassicalFormula> formulas = build();
  return formulas;
}

const ClassicalFormula& classical_formula(std::string_view id) {
  for (const ClassicalFormula& f : classical_formulas()) {
    if (f.id == id) return f;
  }
  throw DomainError("unknown classical formula '" + std::string(id) + "'");
}

SeriesResult classical_sum(const ClassicalFormula& formula, const ParamPoint& point, long n, int digits) {
  return formula.partial(point, n, digits);
}

BigReal classical_partial_sum(const ClassicalFormula& formula, const ParamPoint& point, long n, int digits) {
  return formula.partial_sum(point, n, digits);
}

SeriesResult sine_product_series(std::span<const Rational> xs, SineForm form, long n, int digits) {
  require_terms(n, 16);
  const SineSetup s = sine_setup(xs, form, digits);
  const auto [lo, hi] = sine_tail(s, n, digits);
  return Partial{sine_partial(s, n, digits), lo, hi, n}.result();
}

BigReal sine_product_target(std::span<const Rational> xs, SineForm form, int digits) {
  const int d = std::max(digits, BigReal::kMinDigits);
  const BigReal pi = BigReal::pi(d);
  BigReal p = num(1, d);
  for (const Rational& x : xs) p *= sin(pi * big(x, d)) / pi;
  return form == SineForm::product ? p : BigReal(1) / p;
}

VerificationReport sine_product_limit(std::span<const Rational> xs, SineForm form, long n, int digits,
                                      const BigReal& tolerance) {
  std::vector<Rational> v(xs.begin(), xs.end());
  ParamPoint point;
  for (std::size_t i = 0; i < v.size(); ++i) point.set("x" + std::to_string(i + 1), v[i]);
  point.set("N", Rational(n));
  const bool product = form == SineForm::product;
  return verify_sides(
      product ? "sine-product" : "sine-reciprocal", Family::classical,
      "Substituting $q^{x_i}$ for $x_i$ and then letting $q\\to1$", point,
      [v, form, n](const ParamPoint&, int d) { return SideValue::from_series(sine_product_series(v, form, n, d)); },
      [v, form](const ParamPoint&, int d) {
        return SideValue::from_series(SeriesResult::exact(sine_product_target(v, form, d)));
      },
      digits, tolerance);
}

}  // namespace qpi::limits
