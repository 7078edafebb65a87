#pragma once

#include <stdexcept>
#include <string>

namespace liehodge {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported root-system label or malformed configuration.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an API precondition (rank mismatch, index out of range).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Mathematically meaningful input outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A multiplicity function that cannot be the character of a representation.
class NotACharacterError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numeric inputs that violate an identity they are required to satisfy.
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

/// A post-hoc consistency check failed; indicates a library bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace liehodge
