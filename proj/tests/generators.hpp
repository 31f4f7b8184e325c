#pragma once

// Random generators shared by the property tests.

#include <random>

#include "pflab/bipoly.hpp"
#include "pflab/kform.hpp"

namespace pflab::testing {

inline BiPoly random_bipoly(std::mt19937_64& rng, int max_degree, int coeff_range = 5, double density = 0.5,
                            bool gaussian = false) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution keep(density);
  BiPoly p;
  for (int d = 0; d <= max_degree; ++d)
    for (int s = 0; s <= d; ++s) {
      if (!keep(rng)) continue;
      Rational re(coeff(rng), den(rng));
      Rational im = gaussian ? Rational(coeff(rng), den(rng)) : Rational(0);
      p.add_term(d - s, s, Coefficient(re, im));
    }
  return p;
}

inline KForm random_form(std::mt19937_64& rng, int rank, int max_degree) {
  switch (rank) {
    case 0: return KForm::function(random_bipoly(rng, max_degree));
    case 1: return KForm::one_form(random_bipoly(rng, max_degree), random_bipoly(rng, max_degree));
    default: return KForm::two_form(random_bipoly(rng, max_degree));
  }
}

}  // namespace pflab::testing
