#pragma once

#include <stdexcept>
#include <string>

namespace gtsing {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: malformed text, out-of-range index, wrong order n.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON that does not follow the expected grammar.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A rational function was evaluated where its denominator vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Division by the zero rational function.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An element fails the D_v membership test required by an operation.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold did not. Always indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtsing
