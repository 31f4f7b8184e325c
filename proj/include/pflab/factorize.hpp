#pragma once

#include <complex>
#include <vector>

namespace pflab {

/// w(t) = H0(t)^{-1} t^nu Hinf(t) on the unit circle, with H0 holomorphic and invertible
/// in |t| < 1 and Hinf holomorphic and invertible in |t| > 1, normalized by Hinf(inf) = 1.
struct ScalarFactorization {
  int nu = 0;
  /// Taylor coefficients of H0: h0[k] multiplies t^k.
  std::vector<std::complex<double>> h0;
  /// Coefficients of Hinf: hinf[k] multiplies t^{-k}.
  std::vector<std::complex<double>> hinf;
  /// log H0^{-1} = sum_{k >= 0} log_h0inv[k] t^k and log Hinf = sum_{k >= 1} log_hinf[k] t^{-k}.
  std::vector<std::complex<double>> log_h0inv;
  std::vector<std::complex<double>> log_hinf;

  std::complex<double> h0_at(std::complex<double> t) const;
  std::complex<double> hinf_at(std::complex<double> t) const;
  /// H0^{-1} t^nu Hinf evaluated through the logarithmic series.
  std::complex<double> reconstruct(std::complex<double> t) const;
};

/// Samples at t_j = exp(2 pi i j / N), N a power of two. Throws ZeroOnCircle when
/// min |w| <= tol and AliasingDetected when the upper half of the log spectrum carries
/// more than 1e-12 of its energy.
ScalarFactorization scalar_factorize(const std::vector<std::complex<double>>& samples, double tol);

/// Values of f at the N-th roots of unity.
template <class F>
std::vector<std::complex<double>> sample_on_circle(F f, int N);

}  // namespace pflab

#include <numbers>

template <class F>
std::vector<std::complex<double>> pflab::sample_on_circle(F f, int N) {
  std::vector<std::complex<double>> out(static_cast<size_t>(N));
  for (int j = 0; j < N; ++j) out[static_cast<size_t>(j)] = f(std::polar(1.0, 2 * std::numbers::pi * j / N));
  return out;
}
