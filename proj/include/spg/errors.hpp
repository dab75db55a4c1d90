#pragma once

#include <stdexcept>
#include <string>

namespace spg {

/// Input outside the mathematical domain of an operation (m < 2, a
/// non-idempotent where one is required, an element outside a group).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Enumeration or orbit walking would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A homomorphism was requested between incomparable components.
class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace spg
