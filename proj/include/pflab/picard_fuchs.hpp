#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "pflab/cmatrix.hpp"
#include "pflab/gradient_division.hpp"
#include "pflab/upoly.hpp"

namespace pflab {

/// Monomial 2-forms x^r y^s dx^dy with r + s <= 2n - 2 and their primitives
/// (x^{r+1}/(r+1)) y^s dy, in graded order (1, x, y, x^2, xy, y^2, ...).
struct BasisSpec {
  int n = 0;
  int nu = 0;
  std::vector<Monomial> monomials;
  std::vector<KForm> primitives;

  /// Position of x^r y^s in the basis, or -1.
  int index_of(Monomial m) const;
};

BasisSpec build_basis(int n);

/// (tE - A) X' = B X for the vector X of integrals of the basis primitives.
struct HyperGeomSystem {
  BiPoly hamiltonian;
  BasisSpec basis;
  QMatrix A;
  QMatrix B;
};

HyperGeomSystem derive_system(const Hamiltonian& H);

/// chi(t) = det(tE - A) and P(t) = sum_k t^k P[k] with (tE - A) P(t) = chi(t) E.
struct CharAdjugate {
  UPoly chi;
  std::vector<QMatrix> P;

  CMatrix eval_P(std::complex<double> t) const;
};

CharAdjugate char_adjugate(const QMatrix& A);
inline CharAdjugate char_adjugate(const HyperGeomSystem& sys) { return char_adjugate(sys.A); }

/// True when (tE - A) P(t) == chi(t) E holds coefficientwise.
bool check_adjugate_identity(const QMatrix& A, const CharAdjugate& ca);

/// X' = sum_j A_j / (t - t_j) X
struct FuchsianSystem {
  std::vector<std::complex<double>> points;
  std::vector<CMatrix> residues;

  int dim() const { return residues.empty() ? 0 : static_cast<int>(residues.front().rows()); }
  CMatrix coefficient(std::complex<double> t) const;
};

/// Partial fractions of chi^{-1} P B. Throws RepeatedSpectrum if chi has a multiple root
/// (exactly, or numerically closer than the clustering threshold).
FuchsianSystem to_fuchsian(const HyperGeomSystem& sys, double precision = 1e-10);

struct GeometryMetrics {
  double residual_norm = 0;
  double spread = 0;
};

GeometryMetrics geometry_metrics(const FuchsianSystem& F);

// pf-v1 text serialization.
std::string serialize(const HyperGeomSystem& sys);
std::string serialize(const FuchsianSystem& F);
HyperGeomSystem parse_hypergeometric(std::string_view text);
FuchsianSystem parse_fuchsian(std::string_view text);

}  // namespace pflab
