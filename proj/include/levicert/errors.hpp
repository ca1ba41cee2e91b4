#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levicert {

/// Malformed or inconsistent input (bad exponent, zero coefficient, dimension mismatch, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Problem-file syntax error; carries the 1-based line number.
class ParseError : public InvalidInput {
public:
  ParseError(std::size_t line, const std::string &what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Some coordinate has no pure-power generator, so the 1-type is infinite.
/// `index()` is 0-based; user-facing output reports `index() + 1`.
class NotFiniteType : public std::runtime_error {
public:
  explicit NotFiniteType(std::size_t index)
      : std::runtime_error("not of finite type: coordinate z_" + std::to_string(index + 1) +
                           " has no pure-power generator"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

class EnumerationBudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure that must never be ignored (e.g. eigensolver non-convergence).
class NumericFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace levicert
