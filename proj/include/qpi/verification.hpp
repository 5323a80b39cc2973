#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpi/catalog.hpp"

namespace qpi {

enum class Status {
  pass,
  fail,
  inconclusive,  // precision escalation exhausted
  flagged,       // display-sensitive record that did not verify
  error,         // domain or convergence error at a default point
};

std::string_view to_string(Status status);

struct VerificationReport {
  std::string id;
  Family family = Family::q_main;
  std::string anchor;
  ParamPoint point;
  BigReal lhs;
  BigReal rhs;
  BigReal residual;  // lhs - rhs
  ErrorBound bound;
  BigReal tolerance;
  bool exact = false;  // both sides evaluated in rational arithmetic
  bool pass = false;
  Status status = Status::fail;
  std::string message;
  int digits = 0;       // requested digits
  int digits_used = 0;  // working digits of the accepted evaluation
  std::size_t terms = 0;
  double wall_ms = 0;
};

/// pass = |residual| <= max(tolerance, 4 * bound).
bool passes(const BigReal& residual, const BigReal& bound, const BigReal& tolerance);

struct VerifyPolicy {
  int digits = 60;
  BigReal tolerance = BigReal::pow10(-50, 60);
  std::vector<Rational> q_grid = default_q_grid();
  /// Replaces q in every default point when set.
  std::optional<Rational> q_override;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Verifies lhs = rhs at one point. Both sides go through eval_with_guard
/// unless both are exact. Domain errors propagate; escalation failure
/// yields Status::inconclusive.
VerificationReport verify_sides(const std::string& id, Family family, const std::string& anchor, const ParamPoint& point,
                                const SideEvaluator& lhs, const SideEvaluator& rhs, int digits, const BigReal& tolerance);

/// Verifies a registry record at one point with the record's tolerance floor
/// applied. Display-sensitive records that fail are reported as flagged.
VerificationReport verify_identity(const IdentityRecord& record, const ParamPoint& point, int digits,
                                   const BigReal& tolerance);

/// All default points of the selected records (all records when `ids` is
/// empty). Errors are captured per report; output is ordered by id, then
/// by point order.
std::vector<VerificationReport> verify_all(const Registry& registry, const VerifyPolicy& policy,
                                           const std::vector<std::string>& ids = {});

/// Exit code contract: 0 all pass (flagged reports count as accepted),
/// 1 any fail or error, 3 inconclusive (and nothing failed).
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace qpi
