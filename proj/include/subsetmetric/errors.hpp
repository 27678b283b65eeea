#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subsetmetric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element, set, matrix or M-function does not satisfy its contract.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// chi_distance was called with |a| > |b|.
class OrientationError : public Error {
 public:
  using Error::Error;
};

/// An exact enumeration was asked to run above its size cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A formula is undefined on the given input (e.g. Hausdorff of an empty set).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Absolute tolerance for every real-valued comparison in validity checks.
inline constexpr double kTolerance = 1e-9;

}  // namespace subsetmetric
