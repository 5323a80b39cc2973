#pragma once

#include <stdexcept>
#include <string>

namespace qpi {

/// Argument outside the domain of an operation (q not in (0,1), a pole, n < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A q-shifted factorial that must be used as a divisor vanishes.
class ZeroDenominatorError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series failed to satisfy its stopping rule within the configured term cap.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two guarded evaluations disagreed even after the allowed guard-digit escalations.
class PrecisionEscalationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpi
