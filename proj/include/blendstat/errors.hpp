#pragma once

#include <stdexcept>
#include <string>

namespace blendstat {

/// Numeric input outside the operation's domain (bad probability, p-value
/// of 0, nonpositive degrees of freedom, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structurally incompatible arguments, e.g. distributions over different
/// atom lists.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Constraint set with no feasible distribution.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blendstat
