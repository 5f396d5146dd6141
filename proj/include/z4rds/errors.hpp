#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z4rds {

/// An argument lies outside the domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size cap or search budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; this always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input file or command-line value.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace z4rds
