#pragma once

#include <stdexcept>
#include <string>

namespace crn {

/// Matrix or vector shapes do not fit the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or unreadable network file. Carries the 1-based line number of
/// the offending line, or 0 when the file could not be read.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke an operation's precondition (missing rate, wrong generator count, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input exceeds a documented size cap (dimension, number of polytopes).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random samples (rates or liftings) kept hitting a degenerate configuration.
class NonGenericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crn
