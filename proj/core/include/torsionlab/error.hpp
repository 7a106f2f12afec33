#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A length whose square is not an exact rational was used where exact
/// eigenvalue arithmetic is required.
class NoExactRepresentation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A numerical procedure failed to reach its accuracy contract.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torsionlab
