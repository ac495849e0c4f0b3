#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsfan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (different n, p or z-mode).
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for its inputs.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A step budget ran out before the procedure finished.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntax error in the operator grammar. `position` is a 0-based
/// byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bsfan
