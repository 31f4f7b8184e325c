#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "pflab/cmatrix.hpp"
#include "pflab/ode_reduction.hpp"
#include "pflab/picard_fuchs.hpp"

namespace pflab {

using cd = std::complex<double>;

/// Line segment or circular arc, parametrized by s in [0, 1].
struct PathSegment {
  enum class Kind { Line, Arc } kind = Kind::Line;
  cd start, end;           // line endpoints
  cd center;               // arc center
  double radius = 0;       // arc radius
  double angle0 = 0;       // arc start angle
  double sweep = 0;        // signed swept angle, positive = counterclockwise

  static PathSegment line(cd a, cd b);
  static PathSegment arc(cd center, double radius, double angle0, double sweep);

  cd point(double s) const;
  cd velocity(double s) const;  // d/ds
  cd begin() const { return point(0); }
  cd finish() const { return point(1); }
  double length() const;
  /// Minimum distance from q to the segment.
  double distance_to(cd q) const;
};

class ComplexPath {
 public:
  ComplexPath() = default;
  explicit ComplexPath(std::vector<PathSegment> segments);

  /// Counterclockwise circle starting and ending at center + radius e^{i angle0}.
  static ComplexPath circle(cd center, double radius, double angle0 = 0);
  /// Closed polygon through the vertices (first vertex repeated at the end).
  static ComplexPath polygon(const std::vector<cd>& vertices);

  const std::vector<PathSegment>& segments() const { return segments_; }
  cd start() const { return segments_.front().begin(); }
  cd end() const { return segments_.back().finish(); }
  bool closed() const;
  double min_distance(const std::vector<cd>& poles) const;
  /// This path followed by `next`; the endpoints must match.
  ComplexPath then(const ComplexPath& next) const;

 private:
  std::vector<PathSegment> segments_;
};

/// Right-hand side X' = A(t) X of a linear system in the complex plane.
struct LinearODE {
  std::function<CMatrix(cd)> coefficient;
  std::vector<cd> poles;
  int dim = 0;
};

LinearODE as_ode(const FuchsianSystem& F);
LinearODE as_ode(const LinearSystem& sys);
/// Companion system of y^(l) + a_1 y^(l-1) + ... + a_l y = 0 for the state (y, y', ..., y^(l-1)).
LinearODE companion(const ScalarODE& eq);

struct TransportOptions {
  double tol = 1e-10;           // relative local error
  double min_pole_distance = 0;  // delta; 0 disables the precondition check
  double pole_step_fraction = 0.25;
  double min_step = 1e-14;
};

/// Transports X0 along the path by adaptive Runge-Kutta-Fehlberg 7(8) stepping.
/// Throws PathTooClose / StepUnderflow.
CMatrix integrate_along_path(const LinearODE& ode, const ComplexPath& path, const CMatrix& X0,
                             const TransportOptions& options = {});

/// Fundamental matrix X(z) with X(base) = X0, evaluated by straight-line transport from the
/// nearest point evaluated so far. Single-valued when the coefficients are entire; with poles
/// the straight segments must stay away from them (PathTooClose otherwise).
class SolutionField {
 public:
  SolutionField(LinearODE ode, cd base, CMatrix X0, TransportOptions options = {});
  const CMatrix& at(cd z);
  int dim() const { return ode_.dim; }
  size_t evaluations() const { return cache_.size(); }

 private:
  LinearODE ode_;
  TransportOptions options_;
  std::vector<std::pair<cd, CMatrix>> cache_;
};

/// M with (transported X0) = X0 M for a closed loop.
CMatrix monodromy(const LinearODE& ode, const ComplexPath& loop, const CMatrix& X0, const TransportOptions& options = {});
CMatrix monodromy(const LinearODE& ode, const ComplexPath& loop, const TransportOptions& options = {});

/// True iff every eigenvalue modulus lies in [1 - tol, 1 + tol]. Throws SingularMatrix.
bool spectral_condition(const CMatrix& M, double tol = 1e-6);

/// Transport in the rescaled time tau with dt/dtau = chi(t), dX/dtau = P(t) B X, along
/// tau in [0, T] on a straight line. Returns the final point t and X.
std::pair<cd, CMatrix> rescaled_transport(const CharAdjugate& ca, const QMatrix& B, cd t0, cd T, const CMatrix& X0,
                                          const TransportOptions& options = {});

}  // namespace pflab
