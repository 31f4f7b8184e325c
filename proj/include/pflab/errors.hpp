#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pflab {

// Every failure raised by the library carries one of these kinds. The CLI maps
// the category of a kind onto its exit status.
enum class ErrorKind {
  // domain errors
  RankOverflow,
  DegreeTooLow,
  NonTransversal,
  NotDecomposable,
  UnsupportedHamiltonian,
  NonRealSpectrum,
  SlitCrossing,
  HypothesisViolated,
  RepeatedSpectrum,
  InvalidArgument,
  ParseError,
  // numerical failures
  NumericalFailure,
  NoRealOval,
  TraceDiverged,
  PathTooClose,
  StepUnderflow,
  ZeroOnBoundary,
  NonConvergent,
  SingularMatrix,
  ZeroOnCircle,
  AliasingDetected,
  // resource exhaustion
  ResourceExceeded,
  // broken internal invariant
  InternalDegreeViolation,
};

enum class ErrorCategory { Domain, Numerical, Resource, Internal };

std::string_view to_string(ErrorKind kind);
ErrorCategory category_of(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorKind::ParseError, message + " at line " + std::to_string(line) + ", column " +
                                         std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised by the relative-cohomology solver. `persistent` is true when the
/// linear system stays inconsistent at degCap + 2 as well.
class NotDecomposableError : public Error {
 public:
  NotDecomposableError(const std::string& message, int cap, bool persistent)
      : Error(ErrorKind::NotDecomposable, message), cap_(cap), persistent_(persistent) {}

  int cap() const noexcept { return cap_; }
  bool persistent() const noexcept { return persistent_; }

 private:
  int cap_;
  bool persistent_;
};

}  // namespace pflab
