#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qpi/errors.hpp"
#include "qpi/guard.hpp"
#include "qpi/verification.hpp"

namespace qpi {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::flagged: return "flagged";
    case Status::error: return "error";
  }
  return "unknown";
}

bool passes(const BigReal& residual, const BigReal& bound, const BigReal& tolerance) {
  return abs(residual) <= max(tolerance, BigReal(4) * bound);
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

GuardedValue guarded_side(const SideEvaluator& side, const ParamPoint& point, int digits) {
  return eval_with_guard([&](int d) { return side(point, d).approx; }, digits);
}

}  // namespace

VerificationReport verify_sides(const std::string& id, Family family, const std::string& anchor, const ParamPoint& point,
                                const SideEvaluator& lhs, const SideEvaluator& rhs, int digits, const BigReal& tolerance) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.id = id;
  rep.family = family;
  rep.anchor = anchor;
  rep.point = point;
  rep.digits = digits;
  rep.tolerance = tolerance;

  // Exact sides are cheap, so probe once at the requested precision.
  const SideValue l0 = lhs(point, digits);
  const SideValue r0 = rhs(point, digits);
  if (l0.exact && r0.exact) {
    const Rational diff = *l0.exact - *r0.exact;
    const int d = std::max(digits, BigReal::kMinDigits);
    rep.exact = true;
    rep.lhs = to_bigreal(*l0.exact, d);
    rep.rhs = to_bigreal(*r0.exact, d);
    rep.residual = to_bigreal(diff, d);
    rep.bound = ErrorBound::zero();
    rep.digits_used = d;
    rep.pass = diff.is_zero();
    rep.status = rep.pass ? Status::pass : Status::fail;
    if (!rep.pass) rep.message = "exact residual " + diff.str();
    rep.wall_ms = elapsed_ms(start);
    return rep;
  }

  try {
    GuardedValue gl, gr;
    if (l0.exact) {
      gl = {l0.approx.value, ErrorBound::zero(), 0, digits, 0};
    } else {
      gl = guarded_side(lhs, point, digits);
    }
    if (r0.exact) {
      gr = {r0.approx.value, ErrorBound::zero(), 0, digits, 0};
    } else {
      gr = guarded_side(rhs, point, digits);
    }
    rep.lhs = gl.value;
    rep.rhs = gr.value;
    rep.residual = gl.value - gr.value;
    rep.bound = gl.bound.combined_with(gr.bound);
    rep.terms = gl.terms_used + gr.terms_used;
    rep.digits_used = std::max(gl.digits_used, gr.digits_used);
    rep.pass = passes(rep.residual, rep.bound.magnitude, tolerance);
    if (rep.pass && rep.bound.magnitude > tolerance) {
      // The residual is covered only because the bound is loose.
      rep.pass = false;
      rep.status = Status::inconclusive;
      rep.message = "error bound " + rep.bound.magnitude.to_string(3) + " exceeds the tolerance";
    } else {
      rep.status = rep.pass ? Status::pass : Status::fail;
    }
  } catch (const PrecisionEscalationError& e) {
    rep.pass = false;
    rep.status = Status::inconclusive;
    rep.message = e.what();
  }
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

VerificationReport verify_identity(const IdentityRecord& record, const ParamPoint& point, int digits,
                                   const BigReal& tolerance) {
  if (record.validate) record.validate(point);
  if (point.has("q") && point.at("q").sign() <= 0) throw DomainError("verification needs q > 0");
  BigReal tol = tolerance;
  if (record.defaults.tolerance_floor_exponent) {
    tol = max(tol, BigReal::pow10(*record.defaults.tolerance_floor_exponent, std::max(digits, BigReal::kMinDigits)));
  }
  VerificationReport rep =
      verify_sides(record.id, record.family, record.anchor, point, record.lhs, record.rhs, digits, tol);
  if (record.display_sensitive && !rep.pass) {
    rep.status = Status::flagged;
    if (!rep.message.empty()) rep.message += "; ";
    rep.message += "display-sensitive record did not verify as displayed";
  }
  return rep;
}

namespace {

struct Task {
  const IdentityRecord* record;
  ParamPoint point;
};

std::vector<ParamPoint> points_for(const IdentityRecord& record, const VerifyPolicy& policy) {
  std::vector<ParamPoint> points = default_points(record, policy.q_grid);
  if (!policy.q_override || record.family == Family::classical || !record.has_param("q")) return points;
  std::vector<ParamPoint> out;
  for (ParamPoint p : points) {
    p.set("q", *policy.q_override);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

VerificationReport run_task(const Task& t, const VerifyPolicy& policy) {
  try {
    return verify_identity(*t.record, t.point, policy.digits, policy.tolerance);
  } catch (const std::exception& e) {
    VerificationReport rep;
    rep.id = t.record->id;
    rep.family = t.record->family;
    rep.anchor = t.record->anchor;
    rep.point = t.point;
    rep.digits = policy.digits;
    rep.tolerance = policy.tolerance;
    rep.status = Status::error;
    rep.message = e.what();
    return rep;
  }
}

}  // namespace

std::vector<VerificationReport> verify_all(const Registry& registry, const VerifyPolicy& policy,
                                           const std::vector<std::string>& ids) {
  std::vector<const IdentityRecord*> selected;
  if (ids.empty()) {
    selected = registry.list();
  } else {
    for (const std::string& id : ids) selected.push_back(&registry.at(id));
    std::sort(selected.begin(), selected.end(), [](auto* a, auto* b) { return a->id < b->id; });
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  }
  std::vector<Task> tasks;
  for (const IdentityRecord* r : selected) {
    for (ParamPoint& p : points_for(*r, policy)) tasks.push_back({r, std::move(p)});
  }

  std::vector<VerificationReport> reports(tasks.size());
  unsigned workers = policy.workers != 0 ? policy.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) reports[i] = run_task(tasks[i], policy);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return reports;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  bool inconclusive = false;
  for (const VerificationReport& r : reports) {
    if (r.status == Status::fail || r.status == Status::error) return 1;
    if (r.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

}  // namespace qpi
