#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pflab {

/// Numeric settings shared by the CLI and the acceptance suite.
struct Tolerances {
  double integrator = 1e-10;
  double quadrature = 1e-9;
  std::uint64_t max_bits = std::uint64_t{1} << 24;

  /// Defaults overridden by PFLAB_TOL_INTEGRATOR, PFLAB_TOL_QUADRATURE, PFLAB_MAX_BITS.
  /// Throws InvalidArgument on malformed values.
  static Tolerances from_environment();
};

/// One record of the line-oriented "report-v1" format:
///
///   schema: report-v1
///   operation: <name>
///   inputs-digest: fnv1a64:<16 hex digits>
///   input.<key>: <value>          (one line per input, in insertion order)
///   value.<key>: <value>
///   error-estimate: <real>        (optional)
///   tolerance: <real>             (optional)
///   status: pass | fail | error
///
/// Values never contain newlines; multi-line strings are rejected.
class Report {
 public:
  explicit Report(std::string operation) : operation_(std::move(operation)) {}

  Report& input(const std::string& key, const std::string& value);
  Report& value(const std::string& key, const std::string& value);
  Report& value(const std::string& key, double v);
  Report& value(const std::string& key, std::int64_t v);
  Report& error_estimate(double e);
  Report& tolerance(double t);
  Report& status(bool pass);
  Report& error(const std::string& kind, const std::string& message);

  std::string digest() const;
  std::string str() const;
  const std::string& operation() const { return operation_; }

 private:
  std::string operation_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::string>> values_;
  std::optional<double> error_estimate_;
  std::optional<double> tolerance_;
  std::string status_ = "pass";
};

/// 64-bit FNV-1a of a byte string, as 16 lowercase hex digits.
std::string fnv1a64(const std::string& bytes);

}  // namespace pflab
