#include "qpi/report.hpp"

#include <chrono>
#include <ctime>
#include <map>

#include "qpi/errors.hpp"

#ifndef QPI_TOOL_VERSION
#define QPI_TOOL_VERSION "0.0.0"
#endif

namespace qpi::report {

using nlohmann::json;

namespace {

constexpr int kPointDigits = 30;
constexpr int kSmallDigits = 8;  // residuals and bounds

std::string num(const BigReal& x, int significant) { return x.to_string(significant); }

}  // namespace

std::string_view tool_version() { return QPI_TOOL_VERSION; }

void validate(const RunConfig& config) {
  if (config.digits < BigReal::kMinDigits)
    throw DomainError("digits must be at least " + std::to_string(BigReal::kMinDigits));
  if (config.digits > 5000) throw DomainError("digits above 5000 are not supported");
  if (config.tolerance.sign() <= 0) throw DomainError("tolerance must be positive");
  if (config.tolerance < BigReal::pow10(-(config.digits - 10), config.digits))
    throw DomainError("tolerance must be at least 1e-" + std::to_string(config.digits - 10) + " at " +
                      std::to_string(config.digits) + " digits");
  const auto in_unit = [](const Rational& q) { return q.sign() > 0 && q < Rational(1); };
  for (const Rational& q : config.q_grid)
    if (!in_unit(q)) throw DomainError("q-grid value " + q.str() + " outside (0,1)");
  if (config.q_override && !in_unit(*config.q_override))
    throw DomainError("q = " + config.q_override->str() + " outside (0,1)");
  if (config.limit_digits < BigReal::kMinDigits) throw DomainError("limit digits must be at least 20");
  if (config.format_version != kSchemaVersion)
    throw DomainError("unknown report format version " + std::to_string(config.format_version));
}

VerifyPolicy to_policy(const RunConfig& config) {
  VerifyPolicy p;
  p.digits = config.digits;
  p.tolerance = config.tolerance;
  p.q_grid = config.q_grid;
  p.q_override = config.q_override;
  p.workers = config.workers;
  return p;
}

std::string decimal(const Rational& value, int digits) {
  return to_bigreal(value, std::max(digits, BigReal::kMinDigits)).to_string(digits);
}

json to_json(const ParamPoint& point, int digits) {
  json out = json::object();
  for (const auto& [name, value] : point.entries()) out[name] = decimal(value, digits);
  return out;
}

json to_json(const VerificationReport& r) {
  json point_exact = json::object();
  for (const auto& [name, value] : r.point.entries()) point_exact[name] = value.str();
  const int shown = std::max(r.digits, BigReal::kMinDigits);
  return json{
      {"id", r.id},
      {"family", std::string(to_string(r.family))},
      {"anchor", r.anchor},
      {"point", to_json(r.point, kPointDigits)},
      {"point_exact", point_exact},
      {"lhs", num(r.lhs, shown)},
      {"rhs", num(r.rhs, shown)},
      {"residual", num(r.residual, kSmallDigits)},
      {"bound", num(r.bound.magnitude, kSmallDigits)},
      {"tolerance", num(r.tolerance, kSmallDigits)},
      {"digits", r.digits},
      {"digits_used", r.digits_used},
      {"terms", r.terms},
      {"exact", r.exact},
      {"pass", r.pass},
      {"status", std::string(to_string(r.status))},
      {"message", r.message},
      {"wall_ms", r.wall_ms},
  };
}

json to_json(const limits::LimitResult& r) {
  json qs = json::array();
  for (const Rational& q : r.qs) qs.push_back(q.str());
  json samples = json::array();
  for (const BigReal& s : r.samples) samples.push_back(num(s, s.digits()));
  json diagnostics = json::array();
  for (const BigReal& d : r.diagnostics) diagnostics.push_back(num(d, kSmallDigits));
  json out{
      {"id", r.id},
      {"exponent", r.exponent},
      {"value", num(r.value, r.value.digits())},
      {"diagnostic", num(r.diagnostic, kSmallDigits)},
      {"diagnostics", diagnostics},
      {"qs", qs},
      {"samples", samples},
      {"status", std::string(limits::to_string(r.status))},
      {"target_text", r.target_text},
      {"target", r.target ? json(num(*r.target, r.target->digits())) : json(nullptr)},
      {"error", r.error ? json(num(*r.error, kSmallDigits)) : json(nullptr)},
      {"terms", r.terms},
      {"wall_ms", r.wall_ms},
  };
  return out;
}

json to_json(const RunConfig& c) {
  json grid = json::array();
  for (const Rational& q : c.q_grid) grid.push_back(q.str());
  return json{
      {"digits", c.digits},
      {"tolerance", num(c.tolerance, kSmallDigits)},
      {"q_grid", grid},
      {"q", c.q_override ? json(c.q_override->str()) : json(nullptr)},
      {"workers", c.workers},
      {"limit_digits", c.limit_digits},
      {"format_version", c.format_version},
  };
}

json build(const RunConfig& config, const std::vector<VerificationReport>& reports,
           const std::vector<limits::LimitResult>& limit_results, const std::string& generated_at) {
  json results = json::array();
  std::map<std::string, int> counts;
  for (const VerificationReport& r : reports) {
    results.push_back(to_json(r));
    ++counts[std::string(to_string(r.status))];
  }
  json lim = json::array();
  for (const limits::LimitResult& r : limit_results) {
    lim.push_back(to_json(r));
    ++counts["limit_" + std::string(limits::to_string(r.status))];
  }
  return json{
      {"schema_version", kSchemaVersion},
      {"tool_version", std::string(tool_version())},
      {"generated_at", generated_at},
      {"config", to_json(config)},
      {"results", results},
      {"limits", lim},
      {"summary", counts},
  };
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json without_timing(json document) {
  document.erase("generated_at");
  for (const char* key : {"results", "limits"}) {
    if (!document.contains(key)) continue;
    for (json& entry : document[key]) entry.erase("wall_ms");
  }
  return document;
}

}  // namespace qpi::report
