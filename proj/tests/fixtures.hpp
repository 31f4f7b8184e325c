#pragma once

// Fixtures shared by the zero-counting tests and the acceptance suite.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pflab/ode_reduction.hpp"
#include "pflab/transport.hpp"
#include "pflab/zero_counting.hpp"

namespace pflab::fixtures {

// Upper bound of |p| on the disk |t - center| <= rho from the Taylor coefficients at center.
inline double disk_sup_bound(const std::vector<double>& coeffs, double center, double rho) {
  // Taylor shift to p(center + s) by repeated Horner steps, then sum |c_k| rho^k
  std::vector<double> shifted = coeffs;
  const size_t n = shifted.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) shifted[j - 1] += center * shifted[j];
  double bound = 0, pw = 1;
  for (double v : shifted) {
    bound += std::abs(v) * pw;
    pw *= rho;
  }
  return bound;
}

// A monic real equation y^(n) + a_1 y^(n-1) + ... + a_n y = 0 with polynomial a_k.
struct RandomEquation {
  std::vector<std::vector<double>> a;  // a[k-1] coefficients, low degree first
  ScalarODE ode;

  std::vector<double> bounds_on(double lo, double hi) const {
    const double center = 0.5 * (lo + hi), rho = 0.5 * (hi - lo);
    std::vector<double> c;
    for (const auto& p : a) c.push_back(disk_sup_bound(p, center, rho));
    return c;
  }
};

inline RandomEquation random_equation(std::mt19937_64& rng, int order, int max_degree, int coeff_range) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> deg(0, max_degree);
  RandomEquation eq;
  eq.ode.order = order;
  for (int k = 0; k < order; ++k) {
    const int d = deg(rng);
    std::vector<double> p;
    std::vector<Coefficient> c;
    for (int j = 0; j <= d; ++j) {
      const int v = coeff(rng);
      p.push_back(v);
      c.emplace_back(v);
    }
    eq.a.push_back(p);
    eq.ode.coeffs.emplace_back(UPoly(c));
  }
  return eq;
}

// Sign changes of the first solution component combined with `combo`, sampled at N + 1 points.
inline int sign_changes(SolutionField& field, const Eigen::VectorXcd& combo, double lo, double hi, int N) {
  int changes = 0;
  double prev = 0;
  for (int j = 0; j <= N; ++j) {
    const double t = lo + (hi - lo) * j / N;
    const double y = (field.at(t).row(0) * combo)(0).real();
    if (y == 0) continue;
    if (prev != 0 && (y > 0) != (prev > 0)) ++changes;
    prev = y;
  }
  return changes;
}

inline Triangle random_triangle(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> r(0, radius), th(0, 2 * std::numbers::pi);
  for (;;) {
    auto point = [&] { return std::polar(radius * std::sqrt(r(rng) / radius), th(rng)); };
    const cd a = point(), b = point(), c = point();
    const double area2 = std::abs((b - a).real() * (c - a).imag() - (b - a).imag() * (c - a).real());
    if (area2 > 0.05 * radius * radius) return Triangle(a, b, c);
  }
}

// Novikov's system x1' = a x1, x2' = (a' + a^2) x1 with a = eps prod (t - t_j).
struct NovikovFixture {
  std::vector<cd> roots;
  double eps = 0;
  std::vector<cd> rectangle;  // counterclockwise corners
  double certified_sup = 0;   // bound of max(|a|, |a' + a^2|) on the rectangle
  LinearODE ode;
  cd base;

  cd a(cd t) const {
    cd p = eps;
    for (const auto& r : roots) p *= t - r;
    return p;
  }
};

inline NovikovFixture novikov_fixture(int d, std::mt19937_64& rng) {
  NovikovFixture fx;
  const double w = 1.0, h = 0.5;
  fx.rectangle = {cd(-w, -h), cd(w, -h), cd(w, h), cd(-w, h)};
  std::uniform_real_distribution<double> ux(-0.8 * w, 0.8 * w), uy(-0.8 * h, 0.8 * h);
  while (static_cast<int>(fx.roots.size()) < d) {
    const cd z(ux(rng), uy(rng));
    bool separated = true;
    for (const auto& r : fx.roots) separated = separated && std::abs(z - r) > 0.15;
    if (separated) fx.roots.push_back(z);
  }
  // prod(t - t_j) in monomial form
  std::vector<cd> p{1.0};
  for (const auto& r : fx.roots) {
    std::vector<cd> q(p.size() + 1, 0.0);
    for (size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] -= r * p[k];
    }
    p = q;
  }
  // sup of |p| and |p'| on the rectangle via |t| <= rho
  const double rho = std::hypot(w, h);
  double P = 0, dP = 0, pw = 1;
  for (size_t k = 0; k < p.size(); ++k) {
    P += std::abs(p[k]) * pw;
    if (k + 1 < p.size()) dP += std::abs(p[k + 1]) * static_cast<double>(k + 1) * pw;
    pw *= rho;
  }
  // |a| + |a' + a^2| <= eps (P + dP) + eps^2 P^2; pick eps with value 0.9
  const double target = 0.9;
  fx.eps = (-(P + dP) + std::sqrt((P + dP) * (P + dP) + 4 * P * P * target)) / (2 * P * P);
  fx.certified_sup = fx.eps * (P + dP) + fx.eps * fx.eps * P * P;
  fx.ode.dim = 2;
  const std::vector<cd> roots = fx.roots;
  const double eps = fx.eps;
  fx.ode.coefficient = [roots, eps](cd t) {
    cd a = eps, da = 0;
    for (const auto& r : roots) {
      da = da * (t - r) + a;
      a *= t - r;
    }
    CMatrix A = CMatrix::Zero(2, 2);
    A(0, 0) = a;
    A(1, 0) = da + a * a;
    return A;
  };
  fx.base = fx.rectangle[0];
  return fx;
}

}  // namespace pflab::fixtures
