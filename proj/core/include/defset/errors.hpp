#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace defset {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A documented precondition or construction invariant does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Instance is larger than the configured desk-scale cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A family question was asked about a formula with no satisfying assignment.
class NoAnchor : public Error {
 public:
  using Error::Error;
};

}  // namespace defset
