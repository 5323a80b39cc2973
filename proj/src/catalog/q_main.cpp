// The seven q-analogues of pi-formulas, each as a series (LHS) against an
// infinite product (RHS). Term ratios are written out per identity; the
// factors (1 - q^{6k+1})/(1 - q) and similar enter as polynomial weights in q^k.

#include "records.hpp"

namespace qpi::catalog {

namespace {

BigReal qbig(const ParamPoint& p, int digits) { return big(p.at("q"), digits); }

SeriesResult ramanujan_a_series(const BigReal& q, int digits) {
  // q^{k^2} (q;q^2)_k^2 (q^2;q^4)_k / (q^4;q^4)_k^3
  HyperSeriesSpec h;
  h.q = q;
  h.ratio.scale = q;
  h.ratio.q_step = 2;
  h.ratio.numer = {{q, 2, 2}, {q * q, 4, 1}};
  h.ratio.denom = {{pow(q, 4), 4, 3}};
  h.weights = well_poised_weights(q, 6);
  return sum(h, digits);
}

SeriesResult ramanujan_b_series(const BigReal& q, int digits) {
  // (-1)^k q^{3k^2} (q;q^2)_k^3 / (q^4;q^4)_k^3
  HyperSeriesSpec h;
  h.q = q;
  h.ratio.scale = -pow(q, 3);
  h.ratio.q_step = 6;
  h.ratio.numer = {{q, 2, 3}};
  h.ratio.denom = {{pow(q, 4), 4, 3}};
  h.weights = well_poised_weights(q, 6);
  return sum(h, digits);
}

SeriesResult thm_c_series(const BigReal& q, int digits) {
  // (q;q)_k / (q;q^2)_{k+1} q^{k(k+1)/2}
  HyperSeriesSpec h;
  h.q = q;
  h.first_term = BigReal(1) / (BigReal(1) - q);
  h.ratio.scale = q;
  h.ratio.q_step = 1;
  h.ratio.numer = {{q, 1, 1}};
  h.ratio.denom = {{pow(q, 3), 2, 1}};
  return sum(h, digits);
}

SeriesResult thm_d_series(const BigReal& q, int digits) {
  // (q;q)_k^2 / (q;q)_{2k+1} q^{k(k+1)}
  HyperSeriesSpec h;
  h.q = q;
  h.first_term = BigReal(1) / (BigReal(1) - q);
  h.ratio.scale = q * q;
  h.ratio.q_step = 2;
  h.ratio.numer = {{q, 1, 2}};
  h.ratio.denom = {{q * q, 2, 1}, {pow(q, 3), 2, 1}};
  return sum(h, digits);
}

SideValue series_value(SeriesResult r) { return SideValue::from_series(std::move(r)); }

IdentityRecord q_main_record(std::string id, std::string anchor, std::string summary) {
  IdentityRecord r;
  r.id = std::move(id);
  r.family = Family::q_main;
  r.anchor = std::move(anchor);
  r.summary = std::move(summary);
  r.params = {{"q", "0 < q < 1"}};
  r.uses_q_grid = true;
  // q = 0 is accepted for side evaluation; verification requires q > 0.
  r.validate = [](const ParamPoint& p) { require_unit_interval(p, "q", true); };
  return r;
}

}  // namespace

SeriesResult sun_series(const BigReal& q, int digits) {
  // (-1)^k q^{2k} (1 + q^{2k+1}) / (1 - q^{2k+1})^3
  HyperSeriesSpec h;
  h.q = q;
  h.first_term = BigReal(1) / pow(BigReal(1) - q, 3);
  h.ratio.scale = -(q * q);
  h.ratio.numer = {{q, 2, 3}};
  h.ratio.denom = {{pow(q, 3), 2, 3}};
  h.weights = {BigReal(1), BigReal(0), q};
  return sum(h, digits);
}

SeriesResult thm_b_series(const BigReal& q, int digits) {
  // (1 + q^{4k+2}) q^{2k} / ((1 + q^{2k+1})^2 (1 - q^{2k+1})^2)
  HyperSeriesSpec h;
  h.q = q;
  h.first_term = BigReal(1) / pow(BigReal(1) - q * q, 2);
  h.ratio.scale = q * q;
  h.ratio.numer = {{q * q, 4, 2}};
  h.ratio.denom = {{pow(q, 6), 4, 2}};
  h.weights = {BigReal(1), BigReal(0), BigReal(0), BigReal(0), q * q};
  return sum(h, digits);
}

SeriesResult thm_e_series(const BigReal& q, int digits) {
  // (1 - q^{3k+2})/(1 - q^2) (q^2;q^2)_k (q;q)_k^2 / (q^3;q^2)_k^3 q^{k(k+1)/2}
  HyperSeriesSpec h;
  h.q = q;
  h.ratio.scale = q;
  h.ratio.q_step = 1;
  h.ratio.numer = {{q * q, 2, 1}, {q, 1, 2}};
  h.ratio.denom = {{pow(q, 3), 2, 3}};
  h.weights = well_poised_weights(q * q, 3);
  return sum(h, digits);
}

void add_q_main(std::vector<IdentityRecord>& out) {
  {
    IdentityRecord r = q_main_record("q-ramanujan-a", "utilized WZ method to derive the two identities",
                                     "sum q^{k^2} (1-q^{6k+1})/(1-q) (q;q^2)_k^2 (q^2;q^4)_k/(q^4;q^4)_k^3 = "
                                     "(1+q)(q^2;q^4)(q^6;q^4)/(q^4;q^4)^2");
    r.lhs = [](const ParamPoint& p, int d) { return series_value(ramanujan_a_series(qbig(p, d), d)); };
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = qbig(p, d);
      SeriesResult v = products({{q * q, 4, 1}, {pow(q, 6), 4, 1}, {pow(q, 4), 4, -2}}, q, d);
      v *= BigReal(1) + q;
      return series_value(std::move(v));
    };
    r.limit_exponent = 0;
    r.limit_target = "4/pi";
    r.limit_value = [](int d) { return BigReal(4) / BigReal::pi(d); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = q_main_record("q-ramanujan-b", "utilized WZ method to derive the two identities",
                                     "sum (-1)^k q^{3k^2} (1-q^{6k+1})/(1-q) (q;q^2)_k^3/(q^4;q^4)_k^3 = "
                                     "(q^3;q^4)(q^5;q^4)/(q^4;q^4)^2");
    r.lhs = [](const ParamPoint& p, int d) { return series_value(ramanujan_b_series(qbig(p, d), d)); };
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = qbig(p, d);
      return series_value(products({{pow(q, 3), 4, 1}, {pow(q, 5), 4, 1}, {pow(q, 4), 4, -2}}, q, d));
    };
    r.limit_exponent = 0;
    r.limit_target = "2*sqrt(2)/pi";
    r.limit_value = [](int d) { return BigReal(2) * sqrt(BigReal(2).with_digits(d)) / BigReal::pi(d); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = q_main_record("sun", "offered the following $q$-analogue of",
                                     "sum (-1)^k q^{2k}(1+q^{2k+1})/(1-q^{2k+1})^3 = (q^2;q^4)^2 (q^4;q^4)^6/(q;q^2)^4");
    r.lhs = [](const ParamPoint& p, int d) { return series_value(sun_series(qbig(p, d), d)); };
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = qbig(p, d);
      return series_value(products({{q * q, 4, 2}, {pow(q, 4), 4, 6}, {q, 2, -4}}, q, d));
    };
    r.limit_exponent = 3;
    r.limit_target = "pi^3/16";
    r.limit_value = [](int d) { return pow(BigReal::pi(d), 3) / BigReal(16); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = q_main_record("thm-b", "Calculating the series on the right hand side by Theorem",
                                     "sum (1+q^{4k+2}) q^{2k}/((1+q^{2k+1})^2 (1-q^{2k+1})^2) = "
                                     "(-q^2;q^2)^2 (q^4;q^4)^4/(q^2;q^4)^2");
    r.lhs = [](const ParamPoint& p, int d) { return series_value(thm_b_series(qbig(p, d), d)); };
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = qbig(p, d);
      return series_value(products({{-(q * q), 2, 2}, {pow(q, 4), 4, 4}, {q * q, 4, -2}}, q, d));
    };
    r.limit_exponent = 2;
    r.limit_target = "pi^2/16";
    r.limit_value = [](int d) { return pow(BigReal::pi(d), 2) / BigReal(16); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = q_main_record("thm-c", "Multiplying both sides by $1/(1-q)$",
                                     "sum (q;q)_k/(q;q^2)_{k+1} q^{k(k+1)/2} = (q^2;q^2)^2/(q;q^2)^2");
    r.lhs = [](const ParamPoint& p, int d) { return series_value(thm_c_series(qbig(p, d), d)); };
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = qbig(p, d);
      return series_value(products({{q * q, 2, 2}, {q, 2, -2}}, q, d));
    };
    r.limit_exponent = 1;
    r.limit_target = "pi/2";
    r.limit_value = [](int d) { return BigReal::pi(d) / BigReal(2); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = q_main_record("thm-d", "Fixing $a=0$, $b=q$",
                                     "sum (q;q)_k^2/(q;q)_{2k+1} q^{k(k+1)} = (q^3;q^3)^2/(q,q^2;q^3)");
    r.lhs = [](const ParamPoint& p, int d) { return series_value(thm_d_series(qbig(p, d), d)); };
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = qbig(p, d);
      return series_value(products({{pow(q, 3), 3, 2}, {q, 3, -1}, {q * q, 3, -1}}, q, d));
    };
    r.limit_exponent = 1;
    r.limit_target = "2*pi/(3*sqrt(3))";
    r.limit_value = [](int d) { return BigReal(2) * BigReal::pi(d) / (BigReal(3) * sqrt(BigReal(3).with_digits(d))); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = q_main_record("thm-e", "Replacing $q$ by $q^2$ in the last equation",
                                     "sum (1-q^{3k+2})/(1-q^2) (q^2;q^2)_k (q;q)_k^2/(q^3;q^2)_k^3 q^{k(k+1)/2} = "
                                     "(q^4;q^2)(q^2;q^2)^3/((q;q^2)(q^3;q^2)^3)");
    r.lhs = [](const ParamPoint& p, int d) { return series_value(thm_e_series(qbig(p, d), d)); };
    r.rhs = [](const ParamPoint& p, int d) {
      const BigReal q = qbig(p, d);
      return series_value(products({{pow(q, 4), 2, 1}, {q * q, 2, 3}, {q, 2, -1}, {pow(q, 3), 2, -3}}, q, d));
    };
    r.limit_exponent = 0;
    r.limit_target = "pi^2/8";
    r.limit_value = [](int d) { return pow(BigReal::pi(d), 2) / BigReal(8); };
    out.push_back(std::move(r));
  }
}

}  // namespace qpi::catalog
