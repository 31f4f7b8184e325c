#pragma once

#include <complex>
#include <vector>

#include "pflab/bipoly.hpp"
#include "pflab/kform.hpp"
#include "pflab/qmatrix.hpp"

namespace pflab {

/// A polynomial H of degree n + 1 >= 2 together with its principal homogeneous part.
class Hamiltonian {
 public:
  /// Throws DegreeTooLow when deg h <= 1.
  explicit Hamiltonian(BiPoly h);

  const BiPoly& h() const { return h_; }
  int n() const { return n_; }
  const BiPoly& principal() const { return principal_; }
  /// dH as a 1-form.
  const KForm& dh() const { return dh_; }

 private:
  BiPoly h_;
  int n_;
  BiPoly principal_;
  KForm dh_;
};

struct TransversalityReport {
  bool transversal = false;
  /// Determinant of the homogeneous map eta -> dL ^ eta from 1-forms of degree n to
  /// 2-forms of degree 2n + 1, i.e. the resultant of L_x and L_y up to sign.
  Coefficient witness;
};

/// Matrix of eta -> dL ^ eta in monomial bases. Columns: u-monomials x^{n-1-k} y^k of
/// eta = u dx + v dy, then v-monomials; rows: x^{2n-1-m} y^m of the dx^dy coefficient.
QMatrix sylvester_map_matrix(const Hamiltonian& H);

TransversalityReport check_transversal(const Hamiltonian& H);

struct DivisionResult {
  KForm ratio;      // eta, rank 1
  KForm remainder;  // R, rank 2, degree <= 2n
};

/// Division of 2-forms by dH with remainder. Construction precomputes the inverse
/// of the homogeneous Sylvester block; throws NonTransversal if it is singular.
class GradientDivider {
 public:
  explicit GradientDivider(const Hamiltonian& H);

  /// Omega = dH ^ eta + R with deg eta <= deg Omega - (n + 1) and deg R <= 2n.
  DivisionResult divide(const KForm& omega) const;

  const Hamiltonian& hamiltonian() const { return H_; }

 private:
  Hamiltonian H_;
  // ratio_[m] = (u, v) with dL ^ (u dx + v dy) = x^{2n-1-m} y^m dx^dy
  std::vector<std::pair<BiPoly, BiPoly>> ratio_;
};

DivisionResult divide(const Hamiltonian& H, const KForm& omega);

struct CriticalPoint {
  std::complex<double> x;
  std::complex<double> y;
  std::complex<double> value;
  int multiplicity = 1;
  double gradient_residual = 0;  // max(|H_x|, |H_y|) at the polished point
};

struct CriticalValue {
  std::complex<double> value;
  int multiplicity = 1;
  double gradient_residual = 0;  // worst residual among merged points
};

/// All n^2 complex critical points (with multiplicity) by elimination of y followed by
/// numerical root isolation and Newton polishing. Throws NonTransversal / NumericalFailure.
std::vector<CriticalPoint> critical_points(const Hamiltonian& H, double precision = 1e-13);

/// Critical values sorted by (real, imag); values closer than 1e-8 (1 + |t|) are merged.
std::vector<CriticalValue> critical_values(const Hamiltonian& H, double precision = 1e-13);

inline constexpr double kCriticalValueMergeTolerance = 1e-8;

}  // namespace pflab
