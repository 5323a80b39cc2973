#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qpi/cli.hpp"
#include "qpi/errors.hpp"
#include "qpi/report.hpp"

namespace qpi::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int env_digits() {
  const char* text = std::getenv(kDigitsEnv);
  if (text == nullptr || *text == '\0') return 60;
  try {
    std::size_t used = 0;
    const int d = std::stoi(text, &used);
    if (used != std::string_view(text).size()) throw std::invalid_argument(text);
    return d;
  } catch (const std::exception&) {
    throw UsageError(std::string(kDigitsEnv) + " is not an integer: '" + text + "'");
  }
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(what + ": cannot parse '" + text + "' as p/r or decimal");
  }
}

/// Default tolerance 1e-50, relaxed to the invariant bound when the digits
/// cannot support it.
BigReal tolerance_for(const std::string& text, int digits) {
  const int d = std::max(digits, BigReal::kMinDigits);
  if (text.empty()) return BigReal::pow10(-std::min(50, digits - 10), d);
  const Rational t = parse_rational(text, "--tol");
  if (t.sign() <= 0) throw DomainError("--tol must be positive");
  return to_bigreal(t, d);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

std::string params_text(const IdentityRecord& r) {
  std::string s;
  for (const ParamSpec& p : r.params) {
    if (p.fixed) continue;
    if (!s.empty()) s += ",";
    s += p.name;
  }
  return s.empty() ? "-" : s;
}

// ---------------------------------------------------------------- list

int cmd_list(const std::string& family_text, std::ostream& out) {
  std::optional<Family> filter;
  if (!family_text.empty()) {
    filter = parse_family(family_text);
    if (!filter) throw UsageError("unknown family '" + family_text + "' (q-main, q-proof-chain, classical, telescoping)");
  }
  const auto rows = default_registry().list(filter);
  std::size_t w_id = 2, w_family = 6;
  for (const IdentityRecord* r : rows) {
    w_id = std::max(w_id, r->id.size());
    w_family = std::max(w_family, to_string(r->family).size());
  }
  out << std::left << std::setw(static_cast<int>(w_id) + 2) << "id" << std::setw(static_cast<int>(w_family) + 2)
      << "family" << std::setw(14) << "parameters" << "anchor\n";
  for (const IdentityRecord* r : rows) {
    out << std::setw(static_cast<int>(w_id) + 2) << r->id << std::setw(static_cast<int>(w_family) + 2)
        << to_string(r->family) << std::setw(14) << params_text(*r) << r->anchor << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string id;
  bool all = false;
  std::string q;
  std::vector<std::string> sets;
  int digits = 60;
  std::string tol;
  bool json = false;
  unsigned workers = 0;
};

void print_reports(const std::vector<VerificationReport>& reports, std::ostream& out) {
  std::map<std::string, int> counts;
  for (const VerificationReport& r : reports) {
    out << std::left << std::setw(13) << to_string(r.status) << std::setw(24) << r.id << std::setw(34)
        << r.point.str();
    if (r.status == Status::error) {
      out << r.message << "\n";
    } else {
      out << "residual " << (r.exact ? std::string(r.residual.is_zero() ? "0 (exact)" : r.residual.to_string(6))
                                     : r.residual.to_string(3))
          << "  bound " << r.bound.magnitude.to_string(3) << "  terms " << r.terms << "  "
          << std::fixed << std::setprecision(1) << r.wall_ms << " ms" << std::defaultfloat;
      if (!r.message.empty()) out << "  (" << r.message << ")";
      out << "\n";
    }
    ++counts[std::string(to_string(r.status))];
  }
  out << reports.size() << " reports:";
  for (const auto& [status, n] : counts) out << " " << n << " " << status;
  out << "\n";
}

std::vector<VerificationReport> verify_with_sets(const IdentityRecord& record, const VerifyArgs& a,
                                                 const report::RunConfig& config) {
  std::vector<ParamPoint> points = default_points(record, config.q_grid);
  if (points.empty()) points.emplace_back();
  std::vector<ParamPoint> unique;
  for (ParamPoint p : points) {
    if (config.q_override) p.set("q", *config.q_override);
    for (const std::string& s : a.sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw UsageError("--set expects name=value, got '" + s + "'");
      const std::string name = s.substr(0, eq);
      if (!record.has_param(name)) throw UsageError("'" + record.id + "' has no parameter '" + name + "'");
      p.set(name, parse_rational(s.substr(eq + 1), "--set " + name));
    }
    if (record.validate) record.validate(p);
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
  }
  std::vector<VerificationReport> out;
  for (const ParamPoint& p : unique) out.push_back(verify_identity(record, p, config.digits, config.tolerance));
  return out;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.all == !a.id.empty()) throw UsageError("verify needs exactly one of an id or --all");
  report::RunConfig config;
  config.digits = a.digits;
  config.tolerance = tolerance_for(a.tol, a.digits);
  config.workers = a.workers;
  if (!a.q.empty()) config.q_override = parse_rational(a.q, "--q");
  report::validate(config);

  const Registry& registry = default_registry();
  std::vector<VerificationReport> reports;
  if (a.all) {
    if (!a.sets.empty()) throw UsageError("--set needs a single id");
    reports = verify_all(registry, report::to_policy(config));
  } else {
    const IdentityRecord* record = registry.find(a.id);
    if (record == nullptr) throw UsageError("unknown identity '" + a.id + "'");
    if (config.q_override && !record->has_param("q")) throw DomainError("'" + a.id + "' has no parameter q");
    if (a.sets.empty()) {
      reports = verify_all(registry, report::to_policy(config), {a.id});
    } else {
      reports = verify_with_sets(*record, a, config);
    }
  }
  if (a.json) {
    out << report::build(config, reports, {}, report::utc_timestamp()).dump(2) << "\n";
  } else {
    print_reports(reports, out);
  }
  return exit_code_for(reports);
}

// ---------------------------------------------------------------- limit

struct LimitArgs {
  std::string id;
  std::optional<int> exponent;
  std::string levels;
  int order = 5;
  int digits = 30;
  bool json = false;
};

void parse_levels(const std::string& text, limits::LimitProbe& probe) {
  if (text.empty()) return;
  std::string t = text;
  if (const auto dots = t.find(".."); dots != std::string::npos) t.replace(dots, 2, ":");
  const auto parts = split(t, ':');
  if (parts.size() != 2) throw UsageError("--levels expects first:last, got '" + text + "'");
  try {
    probe.level_first = std::stoi(parts[0]);
    probe.level_last = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw UsageError("--levels expects integers, got '" + text + "'");
  }
  if (probe.level_first < 0 || probe.level_last > 40) throw DomainError("levels must lie in [0, 40]");
}

void print_limit(const limits::LimitResult& r, const limits::LimitProbe& probe, std::ostream& out) {
  out << "limit " << r.id << "  (1-q)^" << r.exponent << " * LHS(q), q = 1 - " << probe.h0.str() << " * 2^-j, j = "
      << probe.level_first << ".." << probe.level_last << ", order " << probe.order << "\n";
  for (std::size_t i = 0; i < r.samples.size(); ++i)
    out << "  j=" << std::setw(2) << (probe.level_first + static_cast<int>(i)) << "  " << r.samples[i].to_string(25)
        << "\n";
  out << "extrapolant  " << r.value.to_string(25) << "\n";
  out << "diagnostic   " << r.diagnostic.to_string(3) << "\n";
  if (r.target) {
    out << "target       " << r.target_text << " = " << r.target->to_string(25) << "\n";
    out << "error        " << r.error->to_string(3) << "\n";
  }
  out << "status       " << limits::to_string(r.status) << "\n";
  out << "terms " << r.terms << "  " << std::fixed << std::setprecision(1) << r.wall_ms << " ms\n"
      << std::defaultfloat;
}

int cmd_limit(const LimitArgs& a, std::ostream& out) {
  const IdentityRecord* record = default_registry().find(a.id);
  if (record == nullptr) throw UsageError("unknown identity '" + a.id + "'");
  limits::LimitProbe probe;
  probe.id = a.id;
  if (a.exponent) {
    probe.exponent = *a.exponent;
  } else {
    probe = limits::default_probe(*record);
  }
  probe.order = a.order;
  parse_levels(a.levels, probe);
  const limits::LimitResult r = limits::q_to_1_limit(*record, probe, a.digits);
  if (a.json) {
    out << report::to_json(r).dump(2) << "\n";
  } else {
    print_limit(r, probe, out);
  }
  return r.status == limits::LimitStatus::ok ? kPass : kFail;
}

// ---------------------------------------------------------------- report

std::vector<limits::LimitResult> run_limit_probes(const Registry& registry, int digits) {
  std::vector<std::future<limits::LimitResult>> jobs;
  for (const IdentityRecord& r : registry.records()) {
    if (!r.limit_exponent) continue;
    jobs.push_back(std::async(std::launch::async,
                              [&r, digits] { return limits::q_to_1_limit(r, limits::default_probe(r), digits); }));
  }
  std::vector<limits::LimitResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

struct ReportArgs {
  std::string path;
  int digits = 60;
  std::string tol;
  unsigned workers = 0;
  int limit_digits = 30;
  bool skip_limits = false;
};

int cmd_report(const ReportArgs& a, std::ostream& out) {
  report::RunConfig config;
  config.digits = a.digits;
  config.tolerance = tolerance_for(a.tol, a.digits);
  config.workers = a.workers;
  config.limit_digits = a.limit_digits;
  config.output_path = a.path;
  report::validate(config);

  // Fail on an unwritable path before spending time on the run.
  std::ofstream file(a.path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open '" + a.path + "' for writing");

  const Registry& registry = default_registry();
  const std::vector<VerificationReport> reports = verify_all(registry, report::to_policy(config));
  std::vector<limits::LimitResult> probes;
  if (!a.skip_limits) probes = run_limit_probes(registry, config.limit_digits);

  file << report::build(config, reports, probes, report::utc_timestamp()).dump(2) << "\n";
  file.close();
  if (!file) throw DomainError("failed writing '" + a.path + "'");

  int code = exit_code_for(reports);
  std::size_t unstable = 0;
  for (const auto& p : probes) unstable += p.status != limits::LimitStatus::ok;
  if (unstable > 0) code = kFail;
  out << "wrote " << a.path << ": " << reports.size() << " reports, " << probes.size() << " limit probes ("
      << unstable << " not ok), exit " << code << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and verify q-analogues of pi-formulas", "qpi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(report::tool_version()));

  int default_digits = 60;
  try {
    default_digits = env_digits();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string family;
  CLI::App* list = app.add_subcommand("list", "List the identity registry");
  list->add_option("--family", family, "q-main, q-proof-chain, classical or telescoping");

  VerifyArgs va;
  va.digits = default_digits;
  CLI::App* verify = app.add_subcommand("verify", "Verify identities at their default points");
  verify->add_option("id", va.id, "Identity id");
  verify->add_flag("--all", va.all, "Verify every record");
  verify->add_option("--q", va.q, "Replace q by this value (p/r or decimal)");
  verify->add_option("--set", va.sets, "Override a parameter, name=value (single id only)");
  verify->add_option("--digits", va.digits, "Working decimal digits")->capture_default_str();
  verify->add_option("--tol", va.tol, "Absolute tolerance (default 1e-50)");
  verify->add_option("--workers", va.workers, "Worker threads (0: all cores)");
  verify->add_flag("--json", va.json, "Emit a JSON report");

  LimitArgs la;
  CLI::App* limit = app.add_subcommand("limit", "Extrapolate (1-q)^a LHS(q) to q = 1");
  limit->add_option("id", la.id, "Identity id")->required();
  limit->add_option("--exponent", la.exponent, "Normalisation exponent a (default: shipped value)");
  limit->add_option("--levels", la.levels, "Level range first:last (default 4:12)");
  limit->add_option("--order", la.order, "Richardson order")->capture_default_str();
  limit->add_option("--digits", la.digits, "Working decimal digits")->capture_default_str();
  limit->add_flag("--json", la.json, "Emit JSON");

  ReportArgs ra;
  ra.digits = default_digits;
  CLI::App* rep = app.add_subcommand("report", "Write the full verification and limit report as JSON");
  rep->add_option("--out", ra.path, "Output file")->required();
  rep->add_option("--digits", ra.digits, "Working decimal digits")->capture_default_str();
  rep->add_option("--tol", ra.tol, "Absolute tolerance (default 1e-50)");
  rep->add_option("--workers", ra.workers, "Worker threads (0: all cores)");
  rep->add_option("--limit-digits", ra.limit_digits, "Digits for the limit probes")->capture_default_str();
  rep->add_flag("--skip-limits", ra.skip_limits, "Omit the q -> 1 probes");

  std::vector<std::string> argv_store{"qpi"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*list) return cmd_list(family, out);
    if (*verify) return cmd_verify(va, out);
    if (*limit) return cmd_limit(la, out);
    if (*rep) return cmd_report(ra, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace qpi::cli
