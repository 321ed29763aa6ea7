#pragma once

#include <stdexcept>
#include <string>

namespace greedy {

/// Argument outside the domain of an operation (N = 0, s < 0, even M, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two points coincide where a finite kernel value is required.
class CoincidentPointsError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// zeta evaluated at its pole s = 1.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A requested computation exceeds the configured size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace greedy
