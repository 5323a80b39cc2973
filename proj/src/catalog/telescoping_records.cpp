// Registry wrappers around the telescoping module: the general identity with
// s = 2, its terminating form, both corollaries with m = 1, and the m = 2
// specialisations.

#include "qpi/telescoping.hpp"
#include "records.hpp"

namespace qpi::catalog {

namespace {

using R = Rational;
namespace tel = qpi::telescoping;

tel::TelescopeSpec spec_of(const ParamPoint& p) {
  return {{p.at("x1"), p.at("x2")}, {p.at("y1"), p.at("y2")}, p.at("q")};
}

std::vector<R> xs_of(const ParamPoint& p, std::initializer_list<const char*> names) {
  std::vector<R> out;
  for (const char* n : names) out.push_back(p.at(n));
  return out;
}

IdentityRecord tel_record(std::string id, std::string anchor, std::string summary, std::vector<ParamSpec> params) {
  IdentityRecord r;
  r.id = std::move(id);
  r.family = Family::telescoping;
  r.anchor = std::move(anchor);
  r.summary = std::move(summary);
  r.params = std::move(params);
  return r;
}

void validate_lattice(const ParamPoint& p, std::initializer_list<const char*> names) {
  require_unit_interval(p);
  for (const char* n : names) tel::require_off_q_lattice(p.at(n), p.at("q"), n);
}

}  // namespace

void add_telescoping(std::vector<IdentityRecord>& out) {
  const ParamSpec q_spec{"q", "0 < q < 1"};
  {
    IdentityRecord r = tel_record("thm-aa", "Let $\\{x_i\\}_{i=1}^s$ and $\\{y_i\\}_{i=1}^s$ be complex",
                                  "sum (x1,x2;q)_k/(qy1,qy2;q)_k {prod(1-q^k x_i) - prod(1-q^k y_i)} = "
                                  "(x1,x2;q)/(qy1,qy2;q) - (1-y1)(1-y2)",
                                  {{"x1", "real"}, {"x2", "real"}, {"y1", "y1 != q^{-m-1}"}, {"y2", "y2 != q^{-m-1}"}, q_spec});
    r.default_points = {{{"x1", R(1, 2)}, {"x2", R(1, 3)}, {"y1", R(1, 5)}, {"y2", R(1, 7)}, {"q", R(1, 2)}},
                        {{"x1", R(2, 5)}, {"x2", R(3, 5)}, {"y1", R(1, 3)}, {"y2", R(1, 2)}, {"q", R(1, 4)}},
                        {{"x1", R(3, 2)}, {"x2", R(-1, 3)}, {"y1", R(2, 5)}, {"y2", R(5, 3)}, {"q", R(3, 4)}}};
    r.validate = [](const ParamPoint& p) { tel::validate(spec_of(p)); };
    r.lhs = [](const ParamPoint& p, int d) { return SideValue::from_series(tel::infinite_lhs(spec_of(p), d)); };
    r.rhs = [](const ParamPoint& p, int d) { return SideValue::from_series(tel::infinite_rhs(spec_of(p), d)); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = tel_record("thm-aa-terminating", "the result can be written as",
                                  "sum_{k<=n} (x1,x2;q)_k/(qy1,qy2;q)_k {prod(1-q^k x_i) - prod(1-q^k y_i)} = "
                                  "(x1,x2;q)_{n+1}/(qy1,qy2;q)_n - (1-y1)(1-y2)",
                                  {{"x1", "rational"},
                                   {"x2", "rational"},
                                   {"y1", "y1 != q^{-m-1}"},
                                   {"y2", "y2 != q^{-m-1}"},
                                   q_spec,
                                   {"n", "integer 0 <= n <= 500"}});
    r.default_points = {{{"x1", R(1, 2)}, {"x2", R(1, 3)}, {"y1", R(1, 5)}, {"y2", R(1, 7)}, {"q", R(2, 5)}, {"n", R(3)}},
                        {{"x1", R(3, 2)}, {"x2", R(-2, 3)}, {"y1", R(1, 4)}, {"y2", R(3, 7)}, {"q", R(1, 2)}, {"n", R(20)}},
                        {{"x1", R(5, 4)}, {"x2", R(2, 9)}, {"y1", R(-1, 2)}, {"y2", R(4, 5)}, {"q", R(3, 4)}, {"n", R(40)}}};
    r.validate = [](const ParamPoint& p) {
      tel::validate(spec_of(p));
      const long n = p.integer("n");
      if (n < 0 || n > 500) throw DomainError("n must lie in [0, 500]");
    };
    r.lhs = [](const ParamPoint& p, int d) {
      return SideValue::from_exact(tel::finite_sum_identity(spec_of(p), p.integer("n")).lhs, d);
    };
    r.rhs = [](const ParamPoint& p, int d) {
      return SideValue::from_exact(tel::finite_sum_identity(spec_of(p), p.integer("n")).rhs, d);
    };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = tel_record("corl-aa", "Performing the the replacements  $y_i\\to1$",
                                  "(x,q/x;q)/(q,q^2;q) = sum (x,q/x;q)_k/(q,q^2;q)_k {(1-q^k x)(1-q^{k+1}/x) - (1-q^k)(1-q^{k+1})}",
                                  {{"x", "x not in {0} or q^Z"}, q_spec});
    r.default_points = {{{"x", R(1, 2)}, {"q", R(1, 4)}}, {{"x", R(1, 3)}, {"q", R(1, 2)}}, {{"x", R(2, 5)}, {"q", R(3, 4)}}};
    r.validate = [](const ParamPoint& p) { validate_lattice(p, {"x"}); };
    r.lhs = [](const ParamPoint& p, int d) {
      return SideValue::from_series(tel::corollary_a_product(xs_of(p, {"x"}), p.at("q"), d));
    };
    r.rhs = [](const ParamPoint& p, int d) {
      return SideValue::from_series(tel::corollary_a_series(xs_of(p, {"x"}), p.at("q"), d));
    };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = tel_record("corl-bb", "Performing the the replacements $x_i\\to q$",
                                  "(q;q)^2/(x,q/x;q) = 1/(1-q/x) + sum (q;q)_k^2/((x;q)_{k+1}(q/x;q)_{k+2}) "
                                  "{(1-q^{k+1})^2 - (1-q^k x)(1-q^{k+2}/x)}",
                                  {{"x", "x not in {0} or q^Z"}, q_spec});
    r.default_points = {{{"x", R(1, 2)}, {"q", R(1, 3)}}, {{"x", R(1, 3)}, {"q", R(1, 2)}}, {{"x", R(3, 5)}, {"q", R(3, 4)}}};
    r.validate = [](const ParamPoint& p) { validate_lattice(p, {"x"}); };
    r.lhs = [](const ParamPoint& p, int d) {
      return SideValue::from_series(tel::corollary_b_product(xs_of(p, {"x"}), p.at("q"), d));
    };
    r.rhs = [](const ParamPoint& p, int d) {
      return SideValue::from_series(tel::corollary_b_series(xs_of(p, {"x"}), p.at("q"), d));
    };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = tel_record("q-wei-a", "reduces to the following $q$-analogue of",
                                  "(x,y,q/x,q/y;q)/(q,q^2;q)^2 = sum (x,y,q/x,q/y;q)_k/(q,q^2;q)_k^2 "
                                  "{(1-q^k x)(1-q^k y)(1-q^{k+1}/x)(1-q^{k+1}/y) - (1-q^k)^2(1-q^{k+1})^2}",
                                  {{"x", "x not in {0} or q^Z"}, {"y", "y not in {0} or q^Z"}, q_spec});
    r.default_points = {{{"x", R(1, 3)}, {"y", R(2, 5)}, {"q", R(1, 2)}},
                        {{"x", R(1, 2)}, {"y", R(3, 5)}, {"q", R(1, 4)}},
                        {{"x", R(2, 5)}, {"y", R(1, 3)}, {"q", R(3, 4)}}};
    r.validate = [](const ParamPoint& p) { validate_lattice(p, {"x", "y"}); };
    r.lhs = [](const ParamPoint& p, int d) {
      return SideValue::from_series(tel::corollary_a_product(xs_of(p, {"x", "y"}), p.at("q"), d));
    };
    r.rhs = [](const ParamPoint& p, int d) {
      return SideValue::from_series(tel::corollary_a_series(xs_of(p, {"x", "y"}), p.at("q"), d));
    };
    out.push_back(std::move(r));
  }
  {
    // x = y = q^{1/2}, stored after q -> q^2: x = y = q on base q^2.
    IdentityRecord r = tel_record("q-guillera-b", "When $x=y=q^{1/2}$, the last equation reduces",
                                  "(q;q^2)^4/(q^2,q^4;q^2)^2 = sum (q;q^2)_k^4/(q^2,q^4;q^2)_k^2 "
                                  "{(1-q^{2k+1})^4 - (1-q^{2k})^2(1-q^{2k+2})^2}",
                                  {q_spec});
    r.uses_q_grid = true;
    r.validate = [](const ParamPoint& p) { require_unit_interval(p); };
    r.lhs = [](const ParamPoint& p, int d) {
      const R q = p.at("q");
      const std::vector<R> xs{q, q};
      return SideValue::from_series(tel::corollary_a_product(xs, q * q, d));
    };
    r.rhs = [](const ParamPoint& p, int d) {
      const R q = p.at("q");
      const std::vector<R> xs{q, q};
      return SideValue::from_series(tel::corollary_a_series(xs, q * q, d));
    };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r = tel_record("q-wei-b", "reduces to the following $q$-analogue of",
                                  "(q;q)^4/(x,y,q/x,q/y;q) = 1/((1-q/x)(1-q/y)) + sum (q;q)_k^4/((x,y;q)_{k+1}(q/x,q/y;q)_{k+2}) "
                                  "{(1-q^{k+1})^4 - (1-q^k x)(1-q^k y)(1-q^{k+2}/x)(1-q^{k+2}/y)}",
                                  {{"x", "x not in {0} or q^Z"}, {"y", "y not in {0} or q^Z"}, q_spec});
    r.default_points = {{{"x", R(1, 2)}, {"y", R(1, 2)}, {"q", R(1, 4)}},
                        {{"x", R(1, 3)}, {"y", R(2, 5)}, {"q", R(1, 2)}},
                        {{"x", R(3, 5)}, {"y", R(2, 5)}, {"q", R(3, 4)}}};
    r.validate = [](const ParamPoint& p) { validate_lattice(p, {"x", "y"}); };
    r.lhs = [](const ParamPoint& p, int d) {
      return SideValue::from_series(tel::corollary_b_product(xs_of(p, {"x", "y"}), p.at("q"), d));
    };
    r.rhs = [](const ParamPoint& p, int d) {
      return SideValue::from_series(tel::corollary_b_series(xs_of(p, {"x", "y"}), p.at("q"), d));
    };
    out.push_back(std::move(r));
  }
}

}  // namespace qpi::catalog
