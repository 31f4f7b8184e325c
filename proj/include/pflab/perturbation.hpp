#pragma once

#include "pflab/gradient_division.hpp"

namespace pflab {

/// omega = G dH + dF
struct CompensatorPair {
  BiPoly G;
  BiPoly F;
};

/// Solves d(omega) = dG ^ dH for deg G <= deg_cap by undetermined coefficients and
/// integrates the closed remainder omega - G dH to F. Throws NotDecomposableError; its
/// persistent() flag tells whether the system stays inconsistent at deg_cap + 2.
CompensatorPair decompose_relative(const Hamiltonian& H, const KForm& omega, int deg_cap);

/// G * omega, the form whose integral gives the next variation.
KForm second_variation_form(const KForm& omega, const CompensatorPair& pair);

/// For H a nonzero multiple of x^2 + y^2: true iff the integral of omega over every
/// circle vanishes, i.e. d(omega) has no (z zbar)^k dz^dzbar terms.
/// Throws UnsupportedHamiltonian for other H.
bool rotational_center_test(const Hamiltonian& H, const KForm& omega);
/// Same, with H = (x^2 + y^2)/2.
bool rotational_center_test(const KForm& omega);

}  // namespace pflab
