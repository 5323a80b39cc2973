// Classical pi-formulas as registry records: the LHS is a partial sum of N
// terms with a certified tail, the RHS the closed-form constant.

#include "qpi/limits.hpp"
#include "records.hpp"

namespace qpi::catalog {

void add_classical(std::vector<IdentityRecord>& out) {
  for (const limits::ClassicalFormula& f : limits::classical_formulas()) {
    IdentityRecord r;
    r.id = f.id;
    r.family = Family::classical;
    r.anchor = f.anchor;
    r.summary = f.summary + " (" + std::string(limits::to_string(f.tail)) + " tail)";
    for (const std::string& p : f.params) r.params.push_back({p, "0 < " + p + " < 1"});
    r.params.push_back({"N", "number of summed terms"});
    r.default_points = f.default_points;
    r.defaults.tolerance_floor_exponent = f.tolerance_exponent;
    const std::vector<std::string> params = f.params;
    r.validate = [params](const ParamPoint& p) {
      const long n = p.integer("N");
      if (n < 1 || n > 10'000'000) throw DomainError("N must lie in [1, 10^7]");
      for (const std::string& name : params) {
        const Rational& v = p.at(name);
        if (!(v.sign() > 0 && v < Rational(1))) throw DomainError(name + " must lie in (0,1)");
      }
    };
    const std::string id = f.id;
    r.lhs = [id](const ParamPoint& p, int d) {
      const limits::ClassicalFormula& cf = limits::classical_formula(id);
      return SideValue::from_series(limits::classical_sum(cf, p, p.integer("N"), d));
    };
    r.rhs = [id](const ParamPoint& p, int d) {
      return SideValue::from_series(SeriesResult::exact(limits::classical_formula(id).target(p, d)));
    };
    out.push_back(std::move(r));
  }
}

}  // namespace qpi::catalog
