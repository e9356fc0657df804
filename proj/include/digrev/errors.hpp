#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace digrev {

/// Base of every error raised by the library. `kind()` is a short stable tag
/// used by the CLI when it reports failures as JSON.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

/// Malformed or inconsistent caller input (unknown vertex, loop edge, ...).
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

/// Text that could not be parsed. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what), line_(line), column_(column) {}
  const char* kind() const noexcept override { return "parse"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A reversion sequence whose cycle at `index()` is not a directed cycle of
/// the orientation produced by its predecessors.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  const char* kind() const noexcept override { return "validation"; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// An exponential-time operation was refused because the instance exceeds a
/// configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource"; }
};

/// A post-condition that should hold by construction was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal"; }
};

}  // namespace digrev
