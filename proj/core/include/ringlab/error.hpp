#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

/// Raised when a carrier, universe or table would exceed the configured caps.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition of the operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subgroup offered as an ideal is not closed under multiplication.
class NotAnIdeal : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational arithmetic left the 64-bit range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace ringlab
