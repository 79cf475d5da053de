#pragma once

#include <stdexcept>
#include <string>

namespace mvs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A value violates a structural invariant (e.g. a level chain that is not
/// strictly nested).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its hard budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mvs
