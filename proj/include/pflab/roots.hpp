#pragma once

#include <complex>
#include <vector>

#include "pflab/upoly.hpp"

namespace pflab {

struct RootWithMultiplicity {
  std::complex<double> value;
  int multiplicity = 1;
};

/// All complex roots of sum_k c[k] t^k (Aberth-Ehrlich iteration with Newton polishing).
/// Throws NumericalFailure if the iteration does not converge.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

/// Roots of an exact polynomial with exact multiplicities: the square-free decomposition
/// is computed exactly and each square-free factor is solved numerically. Sorted by real
/// part, then imaginary part.
std::vector<RootWithMultiplicity> exact_polynomial_roots(const UPoly& p);

/// Lexicographic (real, imag) order used for every reported list of complex points.
bool complex_less(std::complex<double> a, std::complex<double> b);

}  // namespace pflab
