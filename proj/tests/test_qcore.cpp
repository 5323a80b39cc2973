#include <doctest.h>

#include <array>
#include <vector>

#include "qpi/errors.hpp"
#include "qpi/phi.hpp"
#include "qpi/qpochhammer.hpp"
#include "qpi/series.hpp"
#include "support.hpp"

using namespace qpi;
using qpi::testing::dec;

namespace {

// Direct products at 100 digits with enough factors that the omitted part is
// below 1e-100 (tests/oracles/compute_oracles.py).
const char* kHalfHalf =
    "0.2887880950866024212788997219292307800889119048406857841147410661849022409068470125702428431933480782";
const char* kQuarterHalf =
    "0.5775761901732048425577994438584615601778238096813715682294821323698044818136940251404856863866961564";
const char* kMinusThirdThreeQuarters =
    "3.400929712536685462068523759446485343782338344037774943200063470173681754288858677564732688974506729";

BigReal R(long p, long r, int digits = 80) { return to_bigreal(Rational(p, r), digits); }

}  // namespace

TEST_SUITE("qpochhammer") {
  TEST_CASE("finite products") {
    CHECK(qpoch_finite(Rational(5, 7), Rational(1, 3), 0) == Rational(1));
    CHECK(qpoch_finite(Rational(1, 2), Rational(1, 2), 2) == Rational(3, 8));
    CHECK(qpoch_finite(Rational(1, 3), Rational(1, 3), 3) == Rational(416, 729));
    CHECK_THROWS_AS(qpoch_finite(Rational(1, 3), Rational(1, 3), -1), DomainError);
    const BigReal v = qpoch_finite(R(1, 3), R(1, 3), 3);
    CHECK(abs(v - R(416, 729)) <= BigReal::pow10(-75, 80));
  }

  TEST_CASE("multi-argument products") {
    const std::vector<Rational> none;
    CHECK(qpoch_multi<Rational>(none, Rational(1, 2), 5) == Rational(1));
    const std::vector<Rational> xs{Rational(1, 2), Rational(1, 4)};
    CHECK(qpoch_multi<Rational>(xs, Rational(1, 2), 2) == Rational(63, 256));
  }

  TEST_CASE("rising factorial") {
    CHECK(pochhammer(Rational(7, 5), 0) == Rational(1));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(3, 2), 4) == Rational(945, 16));
  }

  TEST_CASE("infinite products against direct-product oracles") {
    const int digits = 80;
    SeriesResult a = qpoch_infinite(R(1, 2), R(1, 2), digits);
    CHECK(abs(a.value - dec(kHalfHalf)) <= a.bound.magnitude + BigReal::pow10(-78, 90));
    CHECK(a.bound.magnitude < BigReal::pow10(-78, 90));
    SeriesResult b = qpoch_infinite(R(1, 4), R(1, 2), digits);
    CHECK(abs(b.value - dec(kQuarterHalf)) <= BigReal::pow10(-78, 90));
    SeriesResult c = qpoch_infinite(R(-1, 3), R(3, 4), digits);
    CHECK(abs(c.value - dec(kMinusThirdThreeQuarters)) <= BigReal::pow10(-77, 90));
    // splitting at n = 1
    CHECK(abs(a.value - BigReal(1) / BigReal(2) * b.value) <= BigReal::pow10(-78, 90));
  }

  TEST_CASE("infinite product edge cases") {
    SeriesResult z = qpoch_infinite(BigReal(0), R(1, 2), 40);
    CHECK(z.value == BigReal(1));
    CHECK(z.bound.magnitude.is_zero());
    CHECK_THROWS_AS(qpoch_infinite(R(1, 2), BigReal(1), 40), DomainError);
    CHECK_THROWS_AS(qpoch_infinite(R(1, 2), BigReal(0), 40), DomainError);
    CHECK_THROWS_AS(qpoch_infinite(R(1, 2), R(3, 2), 40), DomainError);
    const std::vector<BigReal> xs{R(1, 2), BigReal(0)};
    SeriesResult m = qpoch_multi_infinite(xs, R(1, 2), 60);
    CHECK(abs(m.value - qpoch_infinite(R(1, 2), R(1, 2), 60).value) <= BigReal::pow10(-60, 80));
    // (1;q)_inf vanishes exactly
    CHECK(qpoch_infinite(BigReal(1), R(1, 2), 40).value.is_zero());
  }

  TEST_CASE("power products") {
    const BigReal q = R(1, 3);
    const std::array<PowFactor, 2> f{PowFactor{q, 1, 2}, PowFactor{-q, 2, -1}};
    SeriesResult v = qpoch_power_product(f, q, 60);
    SeriesResult a = qpoch_infinite(q, q, 60);
    SeriesResult b = qpoch_infinite(-q, q * q, 60);
    CHECK(abs(v.value - a.value * a.value / b.value) <= BigReal::pow10(-58, 80));
    const std::array<PowFactor, 1> pole{PowFactor{BigReal(1), 1, -1}};
    CHECK_THROWS_AS(qpoch_power_product(pole, q, 60), ZeroDenominatorError);
  }

  TEST_CASE("splitting law holds exactly (500 draws)") {
    qpi::testing::RationalSource src(7001);
    for (int i = 0; i < 500; ++i) {
      const Rational x = src.any(9, 9);
      const Rational q = src.any(9, 9);
      const long m = src.integer(0, 12);
      const long n = src.integer(0, 12);
      const Rational lhs = qpoch_finite(x, q, m + n);
      const Rational rhs = qpoch_finite(x, q, m) * qpoch_finite(x * q.pow(m), q, n);
      REQUIRE(lhs == rhs);
    }
  }

  TEST_CASE("finite symbol equals the quotient of infinite symbols") {
    const int digits = 60;
    for (long xn : {1L, 2L, 3L}) {
      for (long qn : {1L, 2L, 3L}) {
        const BigReal x = R(xn, 4, digits), q = R(qn, 4, digits);
        for (long n : {1L, 5L, 20L}) {
          const BigReal finite = qpoch_finite(x, q, n);
          const SeriesResult num = qpoch_infinite(x, q, digits);
          const SeriesResult den = qpoch_infinite(x * pow(q, n), q, digits);
          const SeriesResult quotient = num / den;
          CHECK(abs(finite - quotient.value) <= quotient.bound.magnitude + BigReal::pow10(-digits + 2, digits));
        }
      }
    }
  }
}

TEST_SUITE("series engine") {
  TEST_CASE("geometric series") {
    HyperSeriesSpec h;
    h.q = R(1, 2);
    h.ratio.scale = R(1, 3);
    SumControl c;
    c.digits = 50;
    SeriesResult s = sum_hyper(h, c);
    CHECK(abs(s.value - R(3, 2)) <= s.bound.magnitude + BigReal::pow10(-55, 80));
    CHECK(s.bound.magnitude <= BigReal::pow10(-49, 60));
  }

  TEST_CASE("tail bound is sound when the cap is doubled") {
    // sum_k (q;q)_k^{-1}... choose a ratio with a non-trivial majorant:
    // t_{k+1}/t_k = (1 - 3/4 q^k)(1 + q^{k}) / (1 - q^{k+1}) * (1/2)
    HyperSeriesSpec h;
    h.q = R(3, 4);
    h.ratio.scale = R(1, 2);
    h.ratio.numer = {{R(3, 4), 1, 1}, {BigReal(-1), 1, 1}};
    h.ratio.denom = {{h.q, 1, 1}};
    for (long n : {5L, 10L, 20L, 40L}) {
      SumControl c;
      c.digits = 60;
      c.fixed_terms = n;
      const SeriesResult a = sum_hyper(h, c);
      c.fixed_terms = 2 * n;
      const SeriesResult b = sum_hyper(h, c);
      c.fixed_terms = 4 * n;
      const SeriesResult d = sum_hyper(h, c);
      CAPTURE(n);
      CHECK(a.bound.magnitude.is_finite());
      CHECK(abs(b.value - a.value) < a.bound.magnitude);
      CHECK(abs(d.value - a.value) < a.bound.magnitude);
    }
  }

  TEST_CASE("majorant refuses what it cannot bound") {
    TermRatio r;
    r.denom = {{BigReal(4), 1, 1}};
    CHECK_FALSE(ratio_majorant(r, R(1, 2), 1).is_finite());
    CHECK(ratio_majorant(r, R(1, 2), 3).is_finite());
    CHECK_FALSE(ratio_majorant(r, BigReal(1), 3).is_finite());
  }

  TEST_CASE("polynomial weights") {
    // sum_k (1/2)^k (2 - q^k) at q = 1/3: 2*2 - 1/(1 - 1/6) = 4 - 6/5
    HyperSeriesSpec h;
    h.q = R(1, 3);
    h.ratio.scale = R(1, 2);
    h.weights = {BigReal(2), BigReal(-1)};
    SumControl c;
    c.digits = 50;
    const SeriesResult s = sum_hyper(h, c);
    CHECK(abs(s.value - R(14, 5)) <= BigReal::pow10(-48, 60));
  }

  TEST_CASE("divergent ratio hits the cap") {
    HyperSeriesSpec h;
    h.q = R(1, 2);
    h.ratio.scale = BigReal(2);
    SumControl c;
    c.digits = 30;
    c.max_terms = 500;
    CHECK_THROWS_AS(sum_hyper(h, c), NonConvergenceError);
  }

  TEST_CASE("exact zero denominator") {
    HyperSeriesSpec h;
    h.q = R(1, 2);
    h.ratio.denom = {{BigReal(4), 1, 1}};  // 1 - 4 q^2 = 0 at k = 2
    SumControl c;
    c.digits = 30;
    CHECK_THROWS_AS(sum_hyper(h, c), ZeroDenominatorError);
  }

  TEST_CASE("q = 0 keeps only the leading terms") {
    HyperSeriesSpec h;
    h.q = BigReal(0);
    h.ratio.scale = BigReal(1);
    h.ratio.q_step = 1;  // ratio vanishes for k >= 1
    SumControl c;
    c.digits = 30;
    const SeriesResult s = sum_hyper(h, c);
    CHECK(s.value == BigReal(2));
  }
}

TEST_SUITE("phi series") {
  TEST_CASE("z = 0 keeps one term") {
    PhiSeriesSpec s{{R(1, 3), R(1, 5)}, {R(2, 7)}, BigReal(0), R(1, 2), std::nullopt};
    const SeriesResult r = phi_series(s, 40);
    CHECK(r.value == BigReal(1));
    CHECK(r.terms_used == 1);
  }

  TEST_CASE("q-binomial theorem") {
    // 1phi0(a;-;q,z) = (az;q)_inf / (z;q)_inf
    const int digits = 60;
    const BigReal a = R(2, 5, digits), z = R(1, 3, digits), q = R(3, 5, digits);
    PhiSeriesSpec s{{a}, {}, z, q, std::nullopt};
    const SeriesResult lhs = phi_series(s, digits);
    const SeriesResult rhs = qpoch_infinite(a * z, q, digits) / qpoch_infinite(z, q, digits);
    CHECK(abs(lhs.value - rhs.value) <= BigReal::pow10(-58, 80));
  }

  TEST_CASE("recurrence and direct evaluation agree") {
    const int digits = 50;
    const BigReal q = R(1, 2, digits);
    PhiSeriesSpec s{{R(1, 3, digits), R(-2, 5, digits), R(3, 7, digits)}, {R(1, 9, digits), R(-4, 11, digits)}, R(1, 3, digits), q,
                    R(1, 5, digits)};
    const SeriesResult a = phi_series(s, digits, PhiMode::recurrence);
    const SeriesResult b = phi_series(s, digits, PhiMode::direct);
    CHECK(abs(a.value - b.value) <= BigReal::pow10(-47, 60));
  }

  TEST_CASE("upper parameter equal to a lower one with a terminating numerator") {
    // 2phi1(q^-4, b; b; q, z) collapses to (q^-4;q)_k z^k / (q;q)_k summed exactly
    const int digits = 50;
    const Rational qr(1, 3), br(2, 7), zr(3, 5);
    const BigReal q = to_bigreal(qr, digits);
    PhiSeriesSpec s{{to_bigreal(qr.pow(-4), digits), to_bigreal(br, digits)}, {to_bigreal(br, digits)}, to_bigreal(zr, digits), q,
                    std::nullopt};
    const SeriesResult r = phi_series(s, digits);
    Rational exact(0);
    for (long k = 0; k <= 4; ++k)
      exact += qpoch_finite(qr.pow(-4), qr, k) / qpoch_finite(qr, qr, k) * zr.pow(k);
    CHECK(abs(r.value - to_bigreal(exact, digits)) <= BigReal::pow10(-45, 60));
  }

  TEST_CASE("2phi2 sum at a = b = q^(1/2), q = 1/2") {
    const int digits = 60;
    const BigReal q = R(1, 2, digits);
    const BigReal r = sqrt(q);
    PhiSeriesSpec s{{q, q}, {q * r, -(q * r)}, -q, q, std::nullopt};
    const SeriesResult lhs = phi_series(s, digits);
    const BigReal q2 = q * q;
    const SeriesResult rhs = pow(qpoch_infinite(q2, q2, digits), 2) /
                             (qpoch_infinite(q, q2, digits) * qpoch_infinite(q * q2, q2, digits));
    CHECK(abs(lhs.value - rhs.value) <= BigReal::pow10(-55, 80));
  }

  TEST_CASE("5phi4 specialization at q = 1/2") {
    const int digits = 60;
    const BigReal q = R(1, 2, digits);
    const BigReal r = sqrt(q);  // q^(1/2)
    const BigReal r3 = q * r;   // q^(3/2)
    PhiSeriesSpec s{{q, -r3, r, r, r}, {-r, r3, r3, r3}, -q, q, std::nullopt};
    const SeriesResult lhs = phi_series(s, digits);
    const BigReal q2 = q * q;
    const SeriesResult rhs = qpoch_infinite(q, q, digits) * qpoch_infinite(q2, q, digits) *
                             pow(qpoch_infinite(q2, q2, digits), 4) / pow(qpoch_infinite(r3, q, digits), 4);
    CHECK(abs(lhs.value - rhs.value) <= BigReal::pow10(-55, 80));
  }
}
