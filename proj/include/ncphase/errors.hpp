#pragma once

#include <stdexcept>
#include <string>

namespace ncphase {

/// Inputs are well formed but the quantity does not exist (a divergent
/// integral or a formula outside its domain). Distinct from
/// std::invalid_argument, which flags malformed inputs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A radial moment <r^s> whose defining integral diverges at the origin.
class DivergentMoment : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A perturbative formula that has no finite value for the requested level.
class DivergentFormula : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ncphase
