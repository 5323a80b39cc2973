#include "qpi/guard.hpp"

#include <string>

#include "qpi/errors.hpp"

namespace qpi {

GuardedValue eval_with_guard(const PrecisionEvaluator& computation, int digits, int guard, int max_escalations) {
  if (digits < BigReal::kMinDigits) throw DomainError("eval_with_guard: digits must be >= 20");
  if (guard < 10) throw DomainError("eval_with_guard: guard must be >= 10");

  for (int attempt = 0; attempt <= max_escalations; ++attempt, guard *= 2) {
    SeriesResult coarse = computation(digits + guard);
    SeriesResult fine = computation(digits + 2 * guard);
    BigReal diff = abs(coarse.value - fine.value);
    const BigReal scale = max(BigReal(1), abs(fine.value));
    if (diff <= BigReal::pow10(-digits, digits) * scale) {
      ErrorBound bound{diff, BoundKind::rounding};
      bound = bound.combined_with(fine.bound);
      bound.kind = BoundKind::combined;
      return {std::move(fine.value), std::move(bound), fine.terms_used, digits + 2 * guard, attempt};
    }
  }
  throw PrecisionEscalationError("eval_with_guard: runs still disagree after " + std::to_string(max_escalations) +
                                 " guard escalations at " + std::to_string(digits) + " digits");
}

}  // namespace qpi
