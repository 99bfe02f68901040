#pragma once

#include <stdexcept>
#include <string>

namespace mkdv {

/// Invalid or inconsistent configuration, detected before any computation.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructed object failed its class invariants.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multilinear sum would exceed its work budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, long long required_active, long long allowed_active)
      : std::runtime_error(what), required_active_(required_active), allowed_active_(allowed_active) {}

  long long required_active() const noexcept { return required_active_; }
  long long allowed_active() const noexcept { return allowed_active_; }

 private:
  long long required_active_;
  long long allowed_active_;
};

}  // namespace mkdv
