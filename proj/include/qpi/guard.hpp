#pragma once

#include <functional>

#include "qpi/bounds.hpp"

namespace qpi {

inline constexpr int kDefaultGuardDigits = 20;
inline constexpr int kMaxGuardEscalations = 3;

/// A computation parameterised by its working precision in decimal digits.
/// It must be deterministic for a fixed precision and report its own
/// truncation bound.
using PrecisionEvaluator = std::function<SeriesResult(int working_digits)>;

struct GuardedValue {
  BigReal value;
  ErrorBound bound;          // |run1 - run2| + truncation bound of the finer run
  std::size_t terms_used = 0;
  int digits_used = 0;       // working digits of the returned (finer) run
  int escalations = 0;       // guard doublings that were needed
};

/// Runs `computation` at digits+guard and digits+2*guard and returns the finer
/// value with a combined bound. When the runs disagree by more than
/// 10^-digits (relative to max(1,|value|)) the guard is doubled, at most
/// `max_escalations` times, after which PrecisionEscalationError is thrown.
GuardedValue eval_with_guard(const PrecisionEvaluator& computation, int digits, int guard = kDefaultGuardDigits,
                             int max_escalations = kMaxGuardEscalations);

}  // namespace qpi
