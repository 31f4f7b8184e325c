#include "pflab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pflab/errors.hpp"

namespace pflab {

using cd = std::complex<double>;

bool complex_less(cd a, cd b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

namespace {

std::pair<cd, cd> horner_with_derivative(const std::vector<cd>& c, cd z) {
  cd p = 0, dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

}  // namespace

std::vector<cd> polynomial_roots(const std::vector<cd>& coeffs_in) {
  std::vector<cd> c = coeffs_in;
  while (!c.empty() && c.back() == cd(0)) c.pop_back();
  if (c.size() <= 1) return {};
  // Factor out roots at zero exactly.
  size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == cd(0)) ++zeros;
  std::vector<cd> out(zeros, cd(0));
  c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return out;
  const cd lead = c.back();
  for (auto& v : c) v /= lead;
  if (n == 1) {
    out.push_back(-c[0]);
    return out;
  }
  // Cauchy bound for the initial circle.
  double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[static_cast<size_t>(k)]));
  radius = std::min(1.0 + radius, std::pow(std::abs(c[0]), 1.0 / n) + 1.0);
  std::vector<cd> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double angle = 2 * std::numbers::pi * k / n + 0.4;
    z[static_cast<size_t>(k)] = std::polar(radius, angle);
  }
  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      auto [p, dp] = horner_with_derivative(c, z[static_cast<size_t>(k)]);
      if (p == cd(0)) continue;
      cd ratio = p / dp;
      cd sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
      cd w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[static_cast<size_t>(k)] -= w;
      if (std::abs(w) > 1e-15 * (1.0 + std::abs(z[static_cast<size_t>(k)]))) converged = false;
    }
  }
  for (auto& root : z) {
    if (!std::isfinite(root.real()) || !std::isfinite(root.imag()))
      throw Error(ErrorKind::NumericalFailure, "root iteration diverged");
    for (int k = 0; k < 3; ++k) {
      auto [p, dp] = horner_with_derivative(c, root);
      if (dp == cd(0) || p == cd(0)) break;
      cd step = p / dp;
      if (std::abs(step) > 1e-6 * (1 + std::abs(root))) break;
      root -= step;
    }
    out.push_back(root);
  }
  return out;
}

std::vector<RootWithMultiplicity> exact_polynomial_roots(const UPoly& p) {
  std::vector<RootWithMultiplicity> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (cd r : polynomial_roots(factor.to_complex())) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const RootWithMultiplicity& a, const RootWithMultiplicity& b) { return complex_less(a.value, b.value); });
  return out;
}

}  // namespace pflab
