#pragma once

#include <stdexcept>
#include <string>

namespace trop {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: shape mismatches, unparsable entries, empty matrices.
/// The CLI maps these to exit code 2.
class ParseError : public Error {
 public:
  using Error::Error;
};
class DimensionError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Well-formed input outside an operation's domain. CLI exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotIdempotentError : public DomainError {
 public:
  using DomainError::DomainError;
};
class NotFullRankError : public DomainError {
 public:
  using DomainError::DomainError;
};
class NotInHClassError : public DomainError {
 public:
  using DomainError::DomainError;
};
class DiagonalNotZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};
class MatchFailedError : public DomainError {
 public:
  using DomainError::DomainError;
};
class NonUniformCycleMeansError : public DomainError {
 public:
  using DomainError::DomainError;
};
class DoesNotCommuteError : public DomainError {
 public:
  using DomainError::DomainError;
};
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};
class ResourceLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A theorem-backed runtime assertion failed. This indicates a bug in the
/// library (or a falsified theorem), never bad user input.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace trop
