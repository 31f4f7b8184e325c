#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "pflab/errors.hpp"
#include "pflab/parse.hpp"
#include "pflab/perturbation.hpp"

using namespace pflab;
using cd = std::complex<double>;

namespace {

const Hamiltonian& half_circle() {
  static const Hamiltonian H(parse_bipoly("1/2*x^2+1/2*y^2"));
  return H;
}

BiPoly z() { return BiPoly::x() + BiPoly::y() * Coefficient::imaginary_unit(); }
BiPoly zbar() { return BiPoly::x() - BiPoly::y() * Coefficient::imaginary_unit(); }

// A 1-form whose differential is z^i zbar^j dz^dzbar, with dz^dzbar = -2i dx^dy.
KForm form_with_differential(int i, int j) {
  BiPoly w = z().pow(i) * zbar().pow(j) * Coefficient(Rational(0), Rational(-2));
  return KForm::one_form(BiPoly(), w.integrate_x());
}

// Trapezoidal rule on the circle of radius rho; exact for trigonometric polynomials
// of degree below the node count.
cd circle_integral(const KForm& omega, double rho) {
  const int N = 256;
  cd sum = 0;
  for (int k = 0; k < N; ++k) {
    const double th = 2 * std::numbers::pi * k / N;
    const double x = rho * std::cos(th), y = rho * std::sin(th);
    sum += omega.p().eval(x, y) * (-y) + omega.q().eval(x, y) * x;
  }
  return sum * (2 * std::numbers::pi / N);
}

}  // namespace

TEST_CASE("exact forms decompose with zero G") {
  KForm omega = ext_d(KForm::function(parse_bipoly("x^2*y")));
  CompensatorPair pair = decompose_relative(Hamiltonian(parse_bipoly("x^3+y^3-3*x*y")), omega, 2);
  CHECK(pair.G.is_zero());
  CHECK(pair.F == parse_bipoly("x^2*y"));
  CHECK(second_variation_form(omega, pair).is_zero());
}

TEST_CASE("compensator for monomial forms in complex coordinates") {
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4 - i; ++j) {
      if (i == j) continue;
      KForm omega = form_with_differential(i, j);
      CompensatorPair pair = decompose_relative(half_circle(), omega, omega.degree());
      KForm dH = half_circle().dh();
      CHECK(wedge(ext_d(KForm::function(pair.G)), dH) == ext_d(omega));
      CHECK(pair.G * dH + ext_d(KForm::function(pair.F)) == omega);
      // Closed form 2 z^i zbar^j / (i - j), up to functions of H.
      BiPoly expected = z().pow(i) * zbar().pow(j) * Coefficient::ratio(2, i - j);
      CHECK(wedge(ext_d(KForm::function(pair.G - expected)), dH).is_zero());
      // The literal factor 1/(i - j) gives half of d(omega).
      BiPoly literal = z().pow(i) * zbar().pow(j) * Coefficient::ratio(1, i - j);
      CHECK(wedge(ext_d(KForm::function(literal)), dH) + wedge(ext_d(KForm::function(literal)), dH) == ext_d(omega));
    }
}

TEST_CASE("second variation form") {
  KForm omega = form_with_differential(2, 1);
  CompensatorPair pair = decompose_relative(half_circle(), omega, omega.degree());
  KForm g_omega = second_variation_form(omega, pair);
  CHECK(g_omega == pair.G * omega);
  CompensatorPair zero{BiPoly(), BiPoly()};
  CHECK(second_variation_form(omega, zero).is_zero());
}

TEST_CASE("y dx on the circle is not decomposable") {
  Hamiltonian H(parse_bipoly("x^2+y^2"));
  KForm omega = parse_kform("[y, 0]");
  for (int cap : {2, 4, 6}) {
    try {
      decompose_relative(H, omega, cap);
      FAIL("expected NotDecomposable");
    } catch (const NotDecomposableError& e) {
      CHECK(e.kind() == ErrorKind::NotDecomposable);
      CHECK(e.persistent());
      CHECK(e.cap() == cap);
    }
  }
  CHECK_THROWS_AS(decompose_relative(H, omega, 0), Error);
}

TEST_CASE("rotational center test examples") {
  CHECK_FALSE(rotational_center_test(parse_kform("[y, 0]")));
  CHECK(rotational_center_test(parse_kform("[0, x^2*y]")));
  CHECK(rotational_center_test(ext_d(KForm::function(parse_bipoly("x^5*y^2-3*y")))));
  CHECK_FALSE(rotational_center_test(Hamiltonian(parse_bipoly("x^2+y^2")), parse_kform("[y, 0]")));
  try {
    rotational_center_test(Hamiltonian(parse_bipoly("x^3+y^3-3*x*y")), parse_kform("[y, 0]"));
    FAIL("expected UnsupportedHamiltonian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedHamiltonian);
  }
}

TEST_CASE("property: rotational test agrees with circle integrals and the solver") {
  std::mt19937_64 rng(31);
  int vanishing = 0;
  for (int trial = 0; trial < 150; ++trial) {
    KForm omega = pflab::testing::random_form(rng, 1, 4);
    if (trial % 3 == 0) {
      // Strip the rotationally symmetric part so both branches are exercised.
      omega = omega + ext_d(KForm::function(pflab::testing::random_bipoly(rng, 4)));
      omega = KForm::one_form(omega.p() - omega.p().homogeneous_part(1), omega.q() - omega.q().homogeneous_part(1));
      omega = KForm::one_form(omega.p() - omega.p().homogeneous_part(3), omega.q() - omega.q().homogeneous_part(3));
    }
    const bool center = rotational_center_test(omega);
    double worst = 0;
    for (double rho : {0.5, 1.0, 1.7}) worst = std::max(worst, std::abs(circle_integral(omega, rho)));
    if (center) {
      ++vanishing;
      CHECK(worst < 1e-9);
      CHECK_NOTHROW(decompose_relative(half_circle(), omega, std::max(omega.degree(), 1)));
    } else {
      CHECK(worst > 1e-9);
    }
  }
  CHECK(vanishing > 10);
}
