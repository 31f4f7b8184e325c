#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "pflab/gradient_division.hpp"
#include "pflab/picard_fuchs.hpp"

namespace pflab {

using Point2 = std::array<double, 2>;

/// A real nondegenerate extremum of H.
struct MorseCenter {
  Point2 point{};
  double value = 0;
  bool minimum = true;
};

/// Real Morse extrema of H (definite Hessian), sorted by (x, y).
std::vector<MorseCenter> real_centers(const Hamiltonian& H);

/// Real oval {H = t} around a center, star-shaped with respect to it and sampled at
/// the angles theta_k = phase + 2 pi k / N, counterclockwise.
struct Oval {
  double t = 0;
  MorseCenter center;
  std::vector<Point2> points;
  std::vector<double> radii;
  double phase = 0;
  int orientation = 1;  // counterclockwise

  /// max |H(point) - t| over the vertices
  double residual(const Hamiltonian& H) const;
};

struct OvalOptions {
  /// Select the center nearest to this point instead of the first admissible one.
  std::optional<Point2> center_hint;
  int samples = 256;
};

/// Throws NoRealOval when no admissible center exists for t, TraceDiverged when the
/// level curve is not a star-shaped oval around the chosen center.
Oval trace_oval(const Hamiltonian& H, double t, double tol, const OvalOptions& options = {});

/// A 1-form given by arbitrary real coefficient functions, p dx + q dy.
struct SampledForm {
  std::function<double(double, double)> p;
  std::function<double(double, double)> q;
};

SampledForm sampled(const KForm& omega);

struct IntegralEstimate {
  double value = 0;
  double error = 0;  // difference between the last two refinements
  int nodes = 0;
};

/// Integrals of several forms over the same oval by the trapezoidal rule in the angle
/// (spectrally accurate for the periodic integrand), doubling the node count until the
/// estimated error is below tol.
std::vector<IntegralEstimate> oval_integrals(const Hamiltonian& H, const std::vector<SampledForm>& forms, double t,
                                             double tol, const OvalOptions& options = {});

double abelian_integral(const Hamiltonian& H, const KForm& omega, double t, double tol, const OvalOptions& options = {});
IntegralEstimate abelian_integral_estimate(const Hamiltonian& H, const SampledForm& omega, double t, double tol,
                                           const OvalOptions& options = {});

struct GelfandLerayReport {
  double lhs = 0;  // central difference of the integral of omega
  double rhs = 0;  // integral of eta
  double residual = 0;
};

/// Polynomial eta: requires d(omega) = dH ^ eta exactly, else HypothesisViolated.
GelfandLerayReport gelfand_leray_check(const Hamiltonian& H, const KForm& omega, const KForm& eta, double t, double h,
                                       double tol, const OvalOptions& options = {});
/// Rational eta supplied as a sampled form; the hypothesis is the caller's.
GelfandLerayReport gelfand_leray_check(const Hamiltonian& H, const KForm& omega, const SampledForm& eta, double t,
                                       double h, double tol, const OvalOptions& options = {});

/// Integrals of all basis primitives of the system over the oval at t.
std::vector<double> period_vector(const Hamiltonian& H, const BasisSpec& basis, double t, double tol,
                                  const OvalOptions& options = {});

/// max over the grid of |(tE - A) X' - B X|_inf / |X|_inf, with X' by central differences.
double verify_pf(const Hamiltonian& H, const HyperGeomSystem& sys, const std::vector<double>& t_grid, double h,
                 double tol, const OvalOptions& options = {});

}  // namespace pflab
