#pragma once

#include <stdexcept>
#include <string>

namespace freegroup {

/// Input outside an operation's domain (bad letter index, malformed move...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands built over different ranks.
class RankMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Text that does not match the word / tuple / move grammar.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A search hit its visited-state budget before reaching a verdict.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internally produced result failed its own verification. Never expected.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace freegroup
