#pragma once

#include <stdexcept>
#include <string>

namespace k3acm {

/// A request the mathematics does not support, e.g. an effectivity query on a
/// lattice other than the determinantal-quartic profile, or a scan box too
/// small to be conclusive. `name()` is a stable kebab-case identifier that the
/// CLI reports in its output envelope.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed input (bad divisor syntax, bad integer). Maps to CLI exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Never expected on valid inputs.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace k3acm
