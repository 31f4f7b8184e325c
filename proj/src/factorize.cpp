#include "pflab/factorize.hpp"

#include <cmath>
#include <numbers>

#include <fftw3.h>

#include "pflab/errors.hpp"

namespace pflab {

using cd = std::complex<double>;

namespace {

constexpr double kAliasingThreshold = 1e-12;
// spectra at roundoff level carry no aliasing information
constexpr double kRoundoffEnergy = 1e-28;

// c_k = (1/N) sum_j v_j exp(-2 pi i j k / N), k = 0..N-1 (negative k wrap to N + k).
std::vector<cd> forward(std::vector<cd> v) {
  const int n = static_cast<int>(v.size());
  std::vector<cd> out(v.size());
  fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(v.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (auto& c : out) c /= static_cast<double>(n);
  return out;
}

cd series(const std::vector<cd>& c, cd z) {
  cd acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

cd ScalarFactorization::h0_at(cd t) const { return std::exp(-series(log_h0inv, t)); }

cd ScalarFactorization::hinf_at(cd t) const { return std::exp(series(log_hinf, 1.0 / t)); }

cd ScalarFactorization::reconstruct(cd t) const {
  return std::exp(series(log_h0inv, t) + series(log_hinf, 1.0 / t)) * std::pow(t, nu);
}

ScalarFactorization scalar_factorize(const std::vector<cd>& samples, double tol) {
  const size_t n = samples.size();
  if (n < 4 || (n & (n - 1)) != 0) throw Error(ErrorKind::InvalidArgument, "sample count must be a power of two >= 4");
  double min_abs = std::abs(samples[0]);
  for (const auto& w : samples) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw Error(ErrorKind::InvalidArgument, "non-finite sample");
    min_abs = std::min(min_abs, std::abs(w));
  }
  if (min_abs <= tol) throw Error(ErrorKind::ZeroOnCircle, "w vanishes on the circle (min |w| = " + std::to_string(min_abs) + ")");

  // Winding number from the phase increments, then a continuous logarithm of w t^{-nu}.
  double total = 0;
  for (size_t j = 0; j < n; ++j) {
    const double step = std::arg(samples[(j + 1) % n] / samples[j]);
    if (std::abs(step) > std::numbers::pi / 2)
      throw Error(ErrorKind::AliasingDetected, "phase jumps between adjacent samples; sampling too coarse");
    total += step;
  }
  ScalarFactorization out;
  out.nu = static_cast<int>(std::lround(total / (2 * std::numbers::pi)));

  std::vector<cd> g(n);
  double phase = 0;
  cd prev;
  for (size_t j = 0; j < n; ++j) {
    const cd t = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    const cd v = samples[j] * std::pow(t, -out.nu);
    phase = j == 0 ? std::arg(v) : phase + std::arg(v / prev);
    prev = v;
    g[j] = cd(std::log(std::abs(v)), phase);
  }

  const std::vector<cd> c = forward(g);
  double energy = 0, tail = 0;
  for (size_t k = 0; k < n; ++k) {
    const double e = std::norm(c[k]);
    energy += e;
    if (k >= n / 4 && k < n - n / 4 + 1) tail += e;
  }
  if (tail > kAliasingThreshold * energy + kRoundoffEnergy)
    throw Error(ErrorKind::AliasingDetected, "log spectrum is not resolved by the samples");

  const size_t half = n / 2;
  out.log_h0inv.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half));
  out.log_hinf.assign(half, 0.0);
  for (size_t k = 1; k < half; ++k) out.log_hinf[k] = c[n - k];

  // Coefficients of H0 and Hinf from their values on the circle.
  std::vector<cd> v0(n), vinf(n);
  for (size_t j = 0; j < n; ++j) {
    const cd t = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    v0[j] = out.h0_at(t);
    vinf[j] = out.hinf_at(t);
  }
  const std::vector<cd> c0 = forward(v0), cinf = forward(vinf);
  out.h0.assign(c0.begin(), c0.begin() + static_cast<std::ptrdiff_t>(half));
  out.hinf.assign(half, 0.0);
  out.hinf[0] = cinf[0];
  for (size_t k = 1; k < half; ++k) out.hinf[k] = cinf[n - k];

  double worst = 0;
  for (size_t j = 0; j < n; ++j) {
    const cd t = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    worst = std::max(worst, std::abs(out.reconstruct(t) - samples[j]) / std::max(1.0, std::abs(samples[j])));
  }
  if (worst > std::max(tol, 1e-9))
    throw Error(ErrorKind::NumericalFailure, "factorization does not reproduce the samples");
  return out;
}

}  // namespace pflab
