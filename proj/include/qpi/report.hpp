#pragma once

// Machine-readable run reports. Every numeric value is serialized as a
// decimal string so nothing passes through binary floating point.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qpi/limits.hpp"
#include "qpi/verification.hpp"

namespace qpi::report {

inline constexpr int kSchemaVersion = 1;

std::string_view tool_version();

struct RunConfig {
  int digits = 60;
  BigReal tolerance = BigReal::pow10(-50, 60);
  std::vector<Rational> q_grid = default_q_grid();
  std::optional<Rational> q_override;
  unsigned workers = 0;  // 0: hardware concurrency
  int limit_digits = 30;
  std::string output_path;
  int format_version = kSchemaVersion;
};

/// Throws DomainError when digits < 20, tolerance < 10^(-digits+10), a grid
/// value lies outside (0,1) or the format version is unknown.
void validate(const RunConfig& config);

VerifyPolicy to_policy(const RunConfig& config);

/// Decimal rendering of a rational to the given significant digits.
std::string decimal(const Rational& value, int digits);

nlohmann::json to_json(const ParamPoint& point, int digits);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const limits::LimitResult& result);
nlohmann::json to_json(const RunConfig& config);

/// Full document: schema_version, tool_version, generated_at, config,
/// results, limits and a summary of status counts.
nlohmann::json build(const RunConfig& config, const std::vector<VerificationReport>& reports,
                     const std::vector<limits::LimitResult>& limits, const std::string& generated_at);

/// ISO 8601 UTC, second resolution.
std::string utc_timestamp();

/// The document with the timing fields (generated_at, wall_ms) removed.
nlohmann::json without_timing(nlohmann::json document);

}  // namespace qpi::report
