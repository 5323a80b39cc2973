#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpi/catalog.hpp"
#include "qpi/errors.hpp"
#include "qpi/limits.hpp"
#include "qpi/report.hpp"
#include "qpi/telescoping.hpp"

namespace py = pybind11;
using namespace qpi;

namespace {

std::vector<Rational> rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const std::string& t : texts) out.push_back(Rational::parse(t));
  return out;
}

ParamPoint point_of(const std::map<std::string, std::string>& values, const IdentityRecord& record) {
  ParamPoint p;
  // Keep the record's parameter order.
  for (const std::string& name : record.param_names())
    if (auto it = values.find(name); it != values.end()) p.set(name, Rational::parse(it->second));
  for (const auto& [name, text] : values)
    if (!record.has_param(name)) throw DomainError("'" + record.id + "' has no parameter '" + name + "'");
  return p;
}

std::string verify_json(const std::optional<std::string>& id, const std::optional<std::string>& q, int digits,
                        const std::optional<std::string>& tol) {
  report::RunConfig config;
  config.digits = digits;
  config.tolerance = tol ? to_bigreal(Rational::parse(*tol), std::max(digits, BigReal::kMinDigits))
                         : BigReal::pow10(-std::min(50, digits - 10), std::max(digits, BigReal::kMinDigits));
  if (q) config.q_override = Rational::parse(*q);
  report::validate(config);
  std::vector<std::string> ids;
  if (id) {
    const IdentityRecord& r = default_registry().at(*id);
    if (q && !r.has_param("q")) throw DomainError("'" + *id + "' has no parameter q");
    ids.push_back(*id);
  }
  const auto reps = verify_all(default_registry(), report::to_policy(config), ids);
  return report::build(config, reps, {}, report::utc_timestamp()).dump();
}

std::string limit_json(const std::string& id, std::optional<int> exponent, int digits) {
  const IdentityRecord& r = default_registry().at(id);
  limits::LimitProbe probe;
  probe.id = id;
  if (exponent) {
    probe.exponent = *exponent;
  } else {
    probe = limits::default_probe(r);
  }
  return report::to_json(limits::q_to_1_limit(r, probe, digits)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Evaluation and verification of q-series identities";
  m.attr("__version__") = std::string(report::tool_version());
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception<PrecisionEscalationError>(m, "PrecisionEscalationError", PyExc_RuntimeError);

  m.def(
      "list_identities",
      [](const std::optional<std::string>& family) {
        std::optional<Family> filter;
        if (family) {
          filter = parse_family(*family);
          if (!filter) throw DomainError("unknown family '" + *family + "'");
        }
        py::list out;
        for (const IdentityRecord* r : default_registry().list(filter)) {
          py::dict d;
          d["id"] = r->id;
          d["family"] = std::string(to_string(r->family));
          d["anchor"] = r->anchor;
          d["summary"] = r->summary;
          d["params"] = r->param_names();
          out.append(d);
        }
        return out;
      },
      py::arg("family") = py::none());

  m.def(
      "eval_side",
      [](const std::string& id, const std::string& side, const std::map<std::string, std::string>& point, int digits) {
        const IdentityRecord& r = default_registry().at(id);
        if (side != "lhs" && side != "rhs") throw DomainError("side must be 'lhs' or 'rhs'");
        const ParamPoint p = point_of(point, r);
        SideValue v;
        {
          py::gil_scoped_release release;
          v = eval_side(r, side == "lhs" ? Side::lhs : Side::rhs, p, digits);
        }
        return py::make_tuple(v.approx.value.str(), v.approx.bound.magnitude.to_string(8), v.approx.terms_used);
      },
      py::arg("id"), py::arg("side"), py::arg("point"), py::arg("digits") = 60,
      "Value, error bound and term count of one side, as decimal strings.");

  m.def("verify_json", &verify_json, py::arg("id") = py::none(), py::arg("q") = py::none(), py::arg("digits") = 60,
        py::arg("tol") = py::none(), py::call_guard<py::gil_scoped_release>());

  m.def("limit_json", &limit_json, py::arg("id"), py::arg("exponent") = py::none(), py::arg("digits") = 30,
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "finite_sum_identity",
      [](const std::vector<std::string>& xs, const std::vector<std::string>& ys, const std::string& q, long n) {
        const telescoping::TelescopeSpec spec{rationals(xs), rationals(ys), Rational::parse(q)};
        telescoping::validate(spec);
        const auto f = telescoping::finite_sum_identity(spec, n);
        return py::make_tuple(f.lhs.str(), f.rhs.str(), f.residual.str());
      },
      py::arg("xs"), py::arg("ys"), py::arg("q"), py::arg("n"),
      "Exact rational sides of the terminating telescoping identity.");
}
