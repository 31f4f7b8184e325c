#include <cmath>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "pflab/errors.hpp"
#include "pflab/factorize.hpp"
#include "pflab/transport.hpp"

using namespace pflab;

namespace {

const double pi = std::numbers::pi;

CMatrix diag(cd a, cd b) { return CMatrix(Eigen::Vector2cd(a, b).asDiagonal()); }

LinearODE euler(const CMatrix& A) {
  LinearODE ode;
  ode.dim = static_cast<int>(A.rows());
  ode.poles = {0.0};
  ode.coefficient = [A](cd t) { return CMatrix(A / t); };
  return ode;
}

// A0 / t + A1 / (t - 1)
LinearODE two_poles(const CMatrix& A0, const CMatrix& A1) {
  FuchsianSystem F;
  F.points = {0.0, 1.0};
  F.residues = {A0, A1};
  return as_ode(F);
}

CMatrix random_real(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> U(-1, 1);
  CMatrix A(n, n);
  for (Eigen::Index k = 0; k < A.size(); ++k) A.data()[k] = U(rng);
  return A;
}

CMatrix exp_2pi_i(const CMatrix& A) { return CMatrix(A * cd(0, 2 * pi)).exp(); }

// Loops based at 2: around 0 passing above the pole at 1, and around 1.
ComplexPath loop_around_zero() {
  return ComplexPath({PathSegment::line(2, cd(2, 1)), PathSegment::line(cd(2, 1), cd(0, 0.5)),
                      PathSegment::arc(0, 0.5, pi / 2, 2 * pi), PathSegment::line(cd(0, 0.5), cd(2, 1)),
                      PathSegment::line(cd(2, 1), 2)});
}

ComplexPath loop_around_one() {
  return ComplexPath({PathSegment::line(2, 1.5), PathSegment::arc(1, 0.5, 0, 2 * pi), PathSegment::line(1.5, 2)});
}

}  // namespace

TEST_CASE("path geometry") {
  ComplexPath c = ComplexPath::circle(0, 1);
  CHECK(c.closed());
  CHECK(std::abs(c.min_distance({0.0}) - 1) < 1e-15);
  CHECK(std::abs(c.min_distance({cd(3, 0)}) - 2) < 1e-12);
  ComplexPath sq = ComplexPath::polygon({cd(-1, -1), cd(1, -1), cd(1, 1), cd(-1, 1)});
  CHECK(sq.closed());
  CHECK(std::abs(sq.min_distance({cd(0, 0)}) - 1) < 1e-15);
  PathSegment half = PathSegment::arc(0, 1, 0, pi);
  CHECK(std::abs(half.distance_to(cd(0, -2)) - std::sqrt(5.0)) < 1e-12);
  CHECK(std::abs(half.distance_to(cd(0, 2)) - 1) < 1e-12);
  CHECK_THROWS_AS(ComplexPath({PathSegment::line(0, 1), PathSegment::line(2, 3)}), Error);
  CHECK(loop_around_zero().closed());
  CHECK(loop_around_one().min_distance({0.0, 1.0}) >= 0.5 - 1e-12);
}

TEST_CASE("integrate_along_path examples") {
  const CMatrix X0 = (CMatrix(2, 2) << 1, 2, cd(0, 1), -1).finished();
  LinearODE zero;
  zero.dim = 2;
  zero.coefficient = [](cd) { return CMatrix(CMatrix::Zero(2, 2)); };
  CHECK((integrate_along_path(zero, ComplexPath({PathSegment::line(0, cd(3, 4))}), X0) - X0).norm() < 1e-14);

  const CMatrix X = integrate_along_path(euler(diag(0.5, 0)), ComplexPath({PathSegment::line(1, 2)}), X0);
  CHECK((X - diag(std::sqrt(2.0), 1) * X0).norm() < 1e-9);

  // along an arc the solution is t^A as well
  const CMatrix Y = integrate_along_path(euler(diag(0.5, 0)), ComplexPath({PathSegment::arc(0, 1, 0, pi / 2)}),
                                         CMatrix::Identity(2, 2));
  CHECK((Y - diag(std::exp(cd(0, pi / 4)), 1)).norm() < 1e-9);
}

TEST_CASE("integrate_along_path errors") {
  TransportOptions opt;
  opt.min_pole_distance = 0.6;
  CHECK_THROWS_WITH_AS(integrate_along_path(euler(diag(0.5, 0)), ComplexPath::circle(0, 0.5), CMatrix::Identity(2, 2), opt),
                       doctest::Contains("PathTooClose"), Error);
  CHECK_THROWS_AS(integrate_along_path(euler(diag(0.5, 0)), ComplexPath({PathSegment::line(-1, 1)}), CMatrix::Identity(2, 2)),
                  Error);
  TransportOptions coarse;
  coarse.min_step = 0.5;
  CHECK_THROWS_WITH_AS(
      integrate_along_path(euler(diag(0.5, 0)), ComplexPath::circle(0, 1), CMatrix::Identity(2, 2), coarse),
      doctest::Contains("StepUnderflow"), Error);
}

TEST_CASE("monodromy examples") {
  CHECK((monodromy(euler(diag(0.5, 0)), ComplexPath::circle(0, 1)) - diag(-1, 1)).norm() < 1e-9);
  // a loop enclosing no pole
  CHECK((monodromy(euler(diag(0.5, 0)), ComplexPath::circle(3, 1)) - CMatrix::Identity(2, 2)).norm() < 1e-9);
  // the base matrix does not change the result for an Euler system (A commutes with exp)
  const CMatrix X0 = (CMatrix(2, 2) << 2, 0, 0, cd(0, 1)).finished();
  CHECK((monodromy(euler(diag(0.5, 0)), ComplexPath::circle(0, 1), X0) - diag(-1, 1)).norm() < 1e-9);
}

TEST_CASE("composite loops multiply in reverse order") {
  std::mt19937_64 rng(5);
  const LinearODE ode = two_poles(random_real(rng, 2), random_real(rng, 2));
  const CMatrix M0 = monodromy(ode, loop_around_zero());
  const CMatrix M1 = monodromy(ode, loop_around_one());
  const CMatrix M01 = monodromy(ode, loop_around_zero().then(loop_around_one()));
  CHECK((M01 - M1 * M0).norm() < 1e-8 * M1.norm() * M0.norm());
  // the matrices do not commute, so the order is actually tested
  CHECK((M1 * M0 - M0 * M1).norm() > 1e-3);
}

TEST_CASE("property: loop at infinity closes the product") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const LinearODE ode = two_poles(random_real(rng, 2), random_real(rng, 2));
    const CMatrix M0 = monodromy(ode, loop_around_zero());
    const CMatrix M1 = monodromy(ode, loop_around_one());
    // clockwise circle through the base point 2 around both poles
    const CMatrix Minf = monodromy(ode, ComplexPath({PathSegment::arc(0, 2, 0, -2 * pi)}));
    CHECK((Minf * M1 * M0 - CMatrix::Identity(2, 2)).norm() < 1e-8 * Minf.norm() * M1.norm() * M0.norm());
  }
}

TEST_CASE("property: homotopic loops give equal monodromy") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const LinearODE ode = two_poles(random_real(rng, 2), random_real(rng, 2));
    const CMatrix circle = monodromy(ode, ComplexPath::circle(0, 2));
    const CMatrix rect = monodromy(ode, ComplexPath::polygon({2, cd(2, 1), cd(-1, 1), cd(-1, -1), cd(2, -1)}));
    CHECK((circle - rect).norm() < 1e-8 * circle.norm());
  }
}

TEST_CASE("property: Euler monodromy is exp(2 pi i A)") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix A = random_real(rng, 2);
    const CMatrix M = monodromy(euler(A), ComplexPath::circle(0, 1));
    CHECK((M - exp_2pi_i(A)).norm() < 1e-6);
    Eigen::ComplexEigenSolver<CMatrix> es(A, false);
    bool real = true;
    for (int k = 0; k < 2; ++k) real = real && std::abs(es.eigenvalues()(k).imag()) <= 1e-9;
    CHECK(spectral_condition(M) == real);
  }
}

TEST_CASE("spectral_condition examples") {
  CHECK(spectral_condition(diag(-1, 1)));
  CHECK(spectral_condition(CMatrix::Identity(3, 3)));
  const CMatrix M = exp_2pi_i(diag(cd(0, 1), cd(0, 1)));
  CHECK(std::abs(M(0, 0) - std::exp(-2 * pi)) < 1e-12);
  CHECK_FALSE(spectral_condition(M));
  CHECK_THROWS_WITH_AS(spectral_condition(diag(1, 0)), doctest::Contains("SingularMatrix"), Error);
}

TEST_CASE("time-rescaled transport matches the t-parametrized one") {
  QMatrix A(2, 2), B(2, 2);
  A(0, 1) = Coefficient(1);
  A(1, 0) = Coefficient(2);  // spectrum +-sqrt(2)
  B(0, 0) = Coefficient(1);
  B(1, 0) = Coefficient(Rational(1), Rational(1, 2));
  B(1, 1) = Coefficient(-1);
  const CharAdjugate ca = char_adjugate(A);
  const CMatrix Ac = to_complex(A), Bc = to_complex(B);
  LinearODE ode;
  ode.dim = 2;
  ode.poles = {std::sqrt(2.0), -std::sqrt(2.0)};
  ode.coefficient = [Ac, Bc](cd t) { return CMatrix((t * CMatrix::Identity(2, 2) - Ac).inverse() * Bc); };
  const cd t0(0.3, 0.8);
  for (cd T : {cd(0.2, 0), cd(0.1, -0.15)}) {
    const auto [t1, X1] = rescaled_transport(ca, B, t0, T, CMatrix::Identity(2, 2));
    // the image curve stays close to the chord, away from the poles
    const CMatrix Y = integrate_along_path(ode, ComplexPath({PathSegment::line(t0, t1)}), CMatrix::Identity(2, 2));
    CHECK(std::abs(t1 - t0) > 0.05);
    CHECK((X1 - Y).norm() < 1e-8);
  }
}

TEST_CASE("scalar_factorize examples") {
  const auto cube = scalar_factorize(sample_on_circle([](cd t) { return t * t * t; }, 64), 1e-9);
  CHECK(cube.nu == 3);
  CHECK(std::abs(cube.h0[0] - 1.0) < 1e-12);
  CHECK(std::abs(cube.hinf[0] - 1.0) < 1e-12);
  for (size_t k = 1; k < cube.h0.size(); ++k) CHECK(std::abs(cube.h0[k]) < 1e-12);

  // g = g_- + g_{0+}: the nonnegative frequencies land in H0^{-1}, the negative ones in Hinf
  auto gminus = [](cd t) { return cd(0.3, -0.2) / t + 0.1 / (t * t); };
  auto gplus = [](cd t) { return cd(0.25) + cd(0.5, 0.1) * t - 0.2 * t * t * t; };
  const auto f = scalar_factorize(sample_on_circle([&](cd t) { return std::exp(gminus(t) + gplus(t)); }, 128), 1e-9);
  CHECK(f.nu == 0);
  CHECK(std::abs(f.log_h0inv[0] - 0.25) < 1e-12);
  CHECK(std::abs(f.log_h0inv[1] - cd(0.5, 0.1)) < 1e-12);
  CHECK(std::abs(f.log_h0inv[3] + 0.2) < 1e-12);
  CHECK(std::abs(f.log_hinf[1] - cd(0.3, -0.2)) < 1e-12);
  CHECK(std::abs(f.log_hinf[2] - 0.1) < 1e-12);
  for (cd t : {cd(0.3, 0.2), cd(-0.5, 0.1)}) CHECK(std::abs(1.0 / f.h0_at(t) - std::exp(gplus(t))) < 1e-12);
  for (cd t : {cd(2, 1), cd(-3, 0)}) CHECK(std::abs(f.hinf_at(t) - std::exp(gminus(t))) < 1e-12);
  // Taylor coefficients of H0 = exp(-g_{0+}) at the origin: H0(0) = exp(-0.25)
  CHECK(std::abs(f.h0[0] - std::exp(-0.25)) < 1e-12);
  CHECK(std::abs(f.hinf[0] - 1.0) < 1e-12);

  const auto neg = scalar_factorize(sample_on_circle([&](cd t) { return std::exp(gminus(t)) / (t * t); }, 128), 1e-9);
  CHECK(neg.nu == -2);
}

TEST_CASE("scalar_factorize errors") {
  CHECK_THROWS_WITH_AS(scalar_factorize(sample_on_circle([](cd t) { return t - 1.0; }, 64), 1e-9),
                       doctest::Contains("ZeroOnCircle"), Error);
  // a log spectrum far beyond the sampling band
  auto wild = [](cd t) { return std::exp(0.5 * std::pow(t, 40) + 0.5 * std::pow(t, -37)); };
  CHECK_THROWS_WITH_AS(scalar_factorize(sample_on_circle(wild, 64), 1e-9), doctest::Contains("AliasingDetected"), Error);
  CHECK_THROWS_AS(scalar_factorize(std::vector<cd>(48, 1.0), 1e-9), Error);
}

TEST_CASE("property: factorization reconstructs on a finer circle") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> U(-0.3, 0.3);
  std::uniform_int_distribution<int> nu_dist(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cd> coeff(17);
    for (auto& c : coeff) c = cd(U(rng), U(rng));
    const int nu = nu_dist(rng);
    auto w = [&](cd t) {
      cd g = 0;
      for (int k = -8; k <= 8; ++k) g += coeff[static_cast<size_t>(k + 8)] * std::pow(t, k);
      return std::pow(t, nu) * std::exp(g);
    };
    const auto f = scalar_factorize(sample_on_circle(w, 256), 1e-9);
    CHECK(f.nu == nu);
    double worst = 0;
    for (int j = 0; j < 4096; ++j) {
      const cd t = std::polar(1.0, 2 * pi * j / 4096);
      worst = std::max(worst, std::abs(f.reconstruct(t) - w(t)));
      worst = std::max(worst, std::abs(1.0 / f.h0_at(t) * std::pow(t, nu) * f.hinf_at(t) - w(t)));
    }
    CHECK(worst < 1e-8);
  }
}
