#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monid {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (or have mismatched lengths).
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the representable range.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// The prime is not an associated prime of the ideal.
class NotAssociated : public Error {
 public:
  using Error::Error;
};

/// The monomial does not realize the prime as a colon.
class InvalidWitness : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A result contradicts a theorem the computation relies on. Seeing one of
/// these means there is a bug, not bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace monid
