#include "pflab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "pflab/errors.hpp"
#include "pflab/format.hpp"

namespace pflab {

namespace {

double env_real(const char* name, double fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0))
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be a positive number");
  return v;
}

void check_line(const std::string& s) {
  if (s.find('\n') != std::string::npos || s.find('\r') != std::string::npos)
    throw Error(ErrorKind::InvalidArgument, "report fields must be single-line");
}

}  // namespace

Tolerances Tolerances::from_environment() {
  Tolerances t;
  t.integrator = env_real("PFLAB_TOL_INTEGRATOR", t.integrator);
  t.quadrature = env_real("PFLAB_TOL_QUADRATURE", t.quadrature);
  if (const char* raw = std::getenv("PFLAB_MAX_BITS"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0 || raw[0] == '-')
      throw Error(ErrorKind::InvalidArgument, "PFLAB_MAX_BITS must be a positive integer");
    t.max_bits = v;
  }
  return t;
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report& Report::input(const std::string& key, const std::string& value) {
  check_line(key);
  check_line(value);
  inputs_.emplace_back(key, value);
  return *this;
}

Report& Report::value(const std::string& key, const std::string& v) {
  check_line(key);
  check_line(v);
  values_.emplace_back(key, v);
  return *this;
}

Report& Report::value(const std::string& key, double v) { return value(key, format_real(v)); }

Report& Report::value(const std::string& key, std::int64_t v) { return value(key, std::to_string(v)); }

Report& Report::error_estimate(double e) {
  error_estimate_ = e;
  return *this;
}

Report& Report::tolerance(double t) {
  tolerance_ = t;
  return *this;
}

Report& Report::status(bool pass) {
  status_ = pass ? "pass" : "fail";
  return *this;
}

Report& Report::error(const std::string& kind, const std::string& message) {
  std::string flat = message;
  for (auto& c : flat)
    if (c == '\n' || c == '\r') c = ' ';
  values_.emplace_back("error.kind", kind);
  values_.emplace_back("error.message", flat);
  status_ = "error";
  return *this;
}

std::string Report::digest() const {
  std::string canon = operation_ + "\n";
  for (const auto& [k, v] : inputs_) canon += k + "=" + v + "\n";
  return "fnv1a64:" + fnv1a64(canon);
}

std::string Report::str() const {
  std::string out = "schema: report-v1\noperation: " + operation_ + "\ninputs-digest: " + digest() + "\n";
  for (const auto& [k, v] : inputs_) out += "input." + k + ": " + v + "\n";
  for (const auto& [k, v] : values_) out += (k.rfind("error.", 0) == 0 ? k : "value." + k) + ": " + v + "\n";
  if (error_estimate_) out += "error-estimate: " + format_real(*error_estimate_) + "\n";
  if (tolerance_) out += "tolerance: " + format_real(*tolerance_) + "\n";
  out += "status: " + status_ + "\n";
  return out;
}

}  // namespace pflab
