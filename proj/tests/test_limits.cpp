#include <doctest.h>

#include <set>

#include "qpi/catalog.hpp"
#include "qpi/errors.hpp"
#include "qpi/limits.hpp"
#include "support.hpp"

using namespace qpi;
using namespace qpi::limits;
using qpi::testing::dec;

namespace {

using R = Rational;

// sin(pi/3) sin(pi/4) / pi^2 (tests/oracles/compute_oracles.py).
const char* kSineThirdQuarter = "0.06204630001463927499075678447316369590985475147557004165373508915830344";

/// A point with N replaced by `n`.
ParamPoint with_n(const ClassicalFormula& f, long n) {
  ParamPoint p = f.default_points.front();
  p.set("N", R(n));
  return p;
}

/// Term counts small enough to run quickly but large enough for each tail
/// treatment to be active.
long modest_n(const ClassicalFormula& f) {
  switch (f.tail) {
    case TailKind::geometric: return 25;
    case TailKind::alternating: return 300;
    case TailKind::integral: return 500;
    case TailKind::gautschi: return 400;
  }
  return 100;
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("formula table") {
    std::set<std::string> ids;
    for (const ClassicalFormula& f : classical_formulas()) {
      ids.insert(f.id);
      CHECK(!f.anchor.empty());
      CHECK(!f.default_points.empty());
      for (const ParamPoint& p : f.default_points) CHECK(p.has("N"));
    }
    CHECK(ids == std::set<std::string>{"pi-a", "pi-b", "pi-c", "weisstein-a", "weisstein-b", "guillera-a", "wei-a",
                                       "wei-b", "guillera-b", "ramanujan-a", "ramanujan-b"});
    CHECK_THROWS_AS((void)classical_formula("nosuch"), DomainError);
  }

  TEST_CASE("alternating cubes: ten terms are within 1/21^3") {
    const ClassicalFormula& f = classical_formula("pi-b");
    const BigReal s = classical_partial_sum(f, with_n(f, 10), 10, 40);
    const BigReal target = f.target({}, 40);
    CHECK(abs(s - target) <= BigReal(1) / BigReal(21 * 21 * 21));
    CHECK(abs(s - target) > BigReal(1) / BigReal(2 * 23 * 23 * 23));
    // S_10 exactly: sum_{k<10} (-1)^k/(2k+1)^3.
    Rational exact(0);
    for (long k = 0; k < 10; ++k) exact += Rational(k % 2 == 0 ? 1 : -1, (2 * k + 1) * (2 * k + 1) * (2 * k + 1));
    CHECK(abs(s - to_bigreal(exact, 40)) <= BigReal::pow10(-35, 40));
  }

  TEST_CASE("weisstein-a: 120 terms give pi/2 to 30 digits") {
    const ClassicalFormula& f = classical_formula("weisstein-a");
    const SeriesResult r = classical_sum(f, with_n(f, 120), 120, 40);
    CHECK(abs(r.value - BigReal::pi(40) / BigReal(2)) <= BigReal::pow10(-30, 40));
    CHECK(r.bound.magnitude <= BigReal::pow10(-30, 40));
  }

  TEST_CASE("tail bounds cover the true error") {
    for (const ClassicalFormula& f : classical_formulas()) {
      for (const ParamPoint& base : f.default_points) {
        const long n = modest_n(f);
        ParamPoint p = base;
        p.set("N", R(n));
        INFO(f.id << " " << p.str());
        const SeriesResult r = classical_sum(f, p, n, 40);
        const BigReal err = abs(r.value - f.target(p, 40));
        CHECK(err <= r.bound.magnitude + BigReal::pow10(-35, 40));
        CHECK(r.bound.magnitude.sign() > 0);
      }
    }
  }

  TEST_CASE("doubling the term count moves the value by less than the bound") {
    for (const ClassicalFormula& f : classical_formulas()) {
      const long n = modest_n(f);
      const ParamPoint p = with_n(f, n);
      INFO(f.id);
      const SeriesResult a = classical_sum(f, p, n, 40);
      const SeriesResult b = classical_sum(f, p, 2 * n, 40);
      CHECK(abs(a.value - b.value) <= a.bound.magnitude + b.bound.magnitude + BigReal::pow10(-35, 40));
      CHECK(b.bound.magnitude < a.bound.magnitude);
    }
  }

  TEST_CASE("wei-a at x = y = 1/2 is half of guillera-b term for term") {
    const ClassicalFormula& a = classical_formula("wei-a");
    const ClassicalFormula& g = classical_formula("guillera-b");
    ParamPoint p{{"x", R(1, 2)}, {"y", R(1, 2)}, {"N", R(200)}};
    for (long n : {16L, 50L, 200L}) {
      p.set("N", R(n));
      const BigReal sa = classical_partial_sum(a, p, n, 50);
      const BigReal sg = classical_partial_sum(g, ParamPoint{{"N", R(n)}}, n, 50);
      CHECK(abs(BigReal(2) * sa - sg) <= BigReal::pow10(-45, 50));
    }
  }

  TEST_CASE("sine-product forms") {
    const std::vector<R> half{R(1, 2)};
    CHECK(abs(sine_product_target(half, SineForm::product, 40) - BigReal(1) / BigReal::pi(40)) <=
          BigReal::pow10(-38, 40));
    const std::vector<R> tq{R(1, 3), R(1, 4)};
    CHECK(abs(sine_product_target(tq, SineForm::product, 60) - dec(kSineThirdQuarter)) <= BigReal::pow10(-55, 60));
    CHECK(abs(sine_product_target(tq, SineForm::reciprocal, 60) * dec(kSineThirdQuarter) - BigReal(1)) <=
          BigReal::pow10(-55, 60));

    const auto rep = sine_product_limit(tq, SineForm::product, 2000, 30, BigReal::pow10(-8, 30));
    CHECK(rep.pass);
    CHECK(rep.id == "sine-product");
    const auto rec = sine_product_limit(tq, SineForm::reciprocal, 2000, 30, BigReal::pow10(-5, 30));
    CHECK(rec.pass);
    CHECK(abs(rec.residual) <= rec.bound.magnitude);
    // A tolerance below the certified bound is inconclusive, not a pass.
    CHECK(sine_product_limit(tq, SineForm::reciprocal, 2000, 30, BigReal::pow10(-9, 30)).status == Status::inconclusive);
    const std::vector<R> one{R(2, 5)};
    CHECK(sine_product_limit(one, SineForm::product, 2000, 30, BigReal::pow10(-7, 30)).pass);
    const std::vector<R> three{R(1, 2), R(1, 3), R(3, 4)};
    CHECK(sine_product_limit(three, SineForm::reciprocal, 2000, 30, BigReal::pow10(-4, 30)).pass);
  }

  TEST_CASE("sine-product domain") {
    const std::vector<R> tq{R(1, 3), R(1, 4)};
    CHECK_THROWS_AS(sine_product_series(tq, SineForm::product, 15, 30), DomainError);
    const std::vector<R> bad{R(1, 3), R(1)};
    CHECK_THROWS_AS(sine_product_series(bad, SineForm::product, 100, 30), DomainError);
  }

  TEST_CASE("classical registry records validate N") {
    const IdentityRecord& r = default_registry().at("pi-a");
    CHECK_THROWS_AS(eval_side(r, Side::lhs, ParamPoint{{"N", R(0)}}, 30), DomainError);
    CHECK_THROWS_AS(eval_side(r, Side::lhs, ParamPoint{{"N", R(1, 2)}}, 30), DomainError);
    const IdentityRecord& w = default_registry().at("wei-a");
    CHECK_THROWS_AS(eval_side(w, Side::lhs, ParamPoint{{"x", R(3, 2)}, {"y", R(1, 2)}, {"N", R(100)}}, 30), DomainError);
  }
}

TEST_SUITE("q to 1") {
  TEST_CASE("richardson removes polynomial error terms") {
    const int d = 50;
    std::vector<BigReal> samples;
    for (int j = 0; j < 8; ++j) {
      const BigReal h = BigReal(1) / pow(BigReal(2).with_digits(d), j);
      samples.push_back(BigReal(3).with_digits(d) + BigReal(2) * h - BigReal(5) * h * h + pow(h, 3));
    }
    const auto ext = richardson(samples, 3);
    REQUIRE(ext.size() == 5);
    for (const BigReal& v : ext) CHECK(abs(v - BigReal(3)) <= BigReal::pow10(-45, d));
    const auto low = richardson(samples, 1);
    CHECK(low.size() == 7);
    CHECK(abs(low.back() - BigReal(3)) > BigReal::pow10(-6, d));
    CHECK_THROWS_AS(richardson(samples, 0), DomainError);
  }

  TEST_CASE("fast probes reach their targets") {
    for (const char* id : {"thm-c", "thm-d", "q-ramanujan-b"}) {
      const IdentityRecord& r = default_registry().at(id);
      const LimitResult res = q_to_1_limit(r, default_probe(r));
      INFO(id << " value " << res.value.to_string(20));
      CHECK(res.status == LimitStatus::ok);
      REQUIRE(res.error.has_value());
      CHECK(*res.error < BigReal::pow10(-6, 30));
      CHECK(res.diagnostic < BigReal::pow10(-6, 30));
      CHECK(res.samples.size() == 9);
      CHECK(res.qs.front() == R(1) - R(1, 256));
      // The diagnostic never grows by more than a factor 2 over the last three levels.
      const auto& dg = res.diagnostics;
      REQUIRE(dg.size() >= 3);
      for (std::size_t i = dg.size() - 2; i < dg.size(); ++i) CHECK(dg[i] <= BigReal(2) * dg[i - 1]);
    }
  }

  TEST_CASE("shifted exponents are rejected as zero or unstable") {
    const IdentityRecord& r = default_registry().at("thm-c");
    LimitProbe up = default_probe(r);
    up.exponent += 1;
    CHECK(q_to_1_limit(r, up).status == LimitStatus::zero);
    LimitProbe down = default_probe(r);
    down.exponent -= 1;
    CHECK(q_to_1_limit(r, down).status == LimitStatus::unstable);
  }

  TEST_CASE("one sampling serves several exponents") {
    const IdentityRecord& r = default_registry().at("thm-d");
    const LimitProbe probe = default_probe(r);
    const LimitSamples samples = sample_lhs(r, probe);
    CHECK(samples.lhs.size() == 9);
    const LimitResult direct = q_to_1_limit(r, probe);
    CHECK(extrapolate(r, probe, samples).value == direct.value);
    LimitProbe up = probe;
    up.exponent = 2;
    CHECK(extrapolate(r, up, samples).status == LimitStatus::zero);
    LimitProbe shifted = probe;
    shifted.level_first = 3;
    CHECK_THROWS_AS(extrapolate(r, shifted, samples), DomainError);
  }

  TEST_CASE("probe validation") {
    const IdentityRecord& r = default_registry().at("thm-c");
    LimitProbe p = default_probe(r);
    p.level_last = p.level_first + 3;
    CHECK_THROWS_AS(q_to_1_limit(r, p), DomainError);
    p = default_probe(r);
    p.exponent = 40;
    CHECK_THROWS_AS(q_to_1_limit(r, p), DomainError);
    CHECK_THROWS_AS(default_probe(default_registry().at("8phi7-sum")), DomainError);
    LimitProbe any;
    any.id = "8phi7-sum";
    CHECK_THROWS_AS(q_to_1_limit(default_registry().at("8phi7-sum"), any), DomainError);
  }
}
