#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdcode {

// Mismatched matrix or vector shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-supplied value is outside what the operation accepts.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input object lacks the mathematical structure the operation needs
// (e.g. asking for the shadow of a code that is not singly even self-dual).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t limit)
      : std::runtime_error(what), limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

// A post-condition re-check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed input file. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sdcode
