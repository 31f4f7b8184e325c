#include "pflab/zero_counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pflab/errors.hpp"

namespace pflab {

namespace {

const double pi = std::numbers::pi;

double cross(cd a, cd b) { return a.real() * b.imag() - a.imag() * b.real(); }

double segment_distance(cd z, cd a, cd b) {
  const cd v = b - a;
  const double len2 = std::norm(v);
  const double s = len2 > 0 ? std::clamp(std::real((z - a) * std::conj(v)) / len2, 0.0, 1.0) : 0.0;
  return std::abs(z - (a + s * v));
}

double coefficient_sum(const std::vector<double>& c, double r) {
  double sum = 0, term = 1;
  for (size_t k = 0; k < c.size(); ++k) {
    term *= r / static_cast<double>(k + 1);
    sum += c[k] * term;
  }
  return sum;
}

void check_bounds(const std::vector<double>& c) {
  for (double v : c)
    if (!(v >= 0) || !std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "coefficient bounds must be finite and >= 0");
}

}  // namespace

// ---------------------------------------------------------------------------
// Triangle

Triangle::Triangle(cd a, cd b, cd c) : v_{a, b, c} {
  const double area2 = cross(b - a, c - a);
  const double scale = std::max({std::norm(b - a), std::norm(c - a), std::norm(c - b)});
  if (!std::isfinite(area2) || std::abs(area2) <= 1e-14 * scale)
    throw Error(ErrorKind::InvalidArgument, "degenerate triangle");
  if (area2 < 0) std::swap(v_[1], v_[2]);
}

double Triangle::perimeter() const {
  return std::abs(v_[1] - v_[0]) + std::abs(v_[2] - v_[1]) + std::abs(v_[0] - v_[2]);
}

double Triangle::area() const { return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]); }

bool Triangle::contains(cd z) const {
  for (int k = 0; k < 3; ++k)
    if (cross(v_[(k + 1) % 3] - v_[k], z - v_[k]) <= 0) return false;
  return true;
}

double Triangle::boundary_distance(cd z) const {
  double d = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) d = std::min(d, segment_distance(z, v_[k], v_[(k + 1) % 3]));
  return d;
}

// ---------------------------------------------------------------------------
// Bounds

DisconjugacyReport disconjugacy_test(const std::vector<double>& c, double r) {
  check_bounds(c);
  if (!(r >= 0)) throw Error(ErrorKind::InvalidArgument, "interval length must be >= 0");
  const double sum = coefficient_sum(c, r);
  return {sum < 1, 1 - sum};
}

std::int64_t interval_zero_bound(const std::vector<double>& c, double length) {
  check_bounds(c);
  if (c.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one coefficient bound");
  if (!(length >= 0) || !std::isfinite(length)) throw Error(ErrorKind::InvalidArgument, "length must be finite and >= 0");
  const auto n = static_cast<std::int64_t>(c.size());
  const double target = 0.5;
  // relative slack for the comparison with the threshold, so closed forms such as r* = 1 hit exactly
  auto fits = [&](double r) { return coefficient_sum(c, r) <= target * (1 + 1e-12); };
  if (length == 0 || fits(length)) return n - 1;
  // largest admissible r by bisection; the sum is increasing in r
  double lo = 0, hi = length;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (fits(mid) ? lo : hi) = mid;
  }
  if (lo <= 0) throw Error(ErrorKind::ResourceExceeded, "coefficient bounds too large for a finite partition");
  const double pieces = std::ceil(length / lo);
  if (pieces > 1e15) throw Error(ErrorKind::ResourceExceeded, "partition too fine");
  auto m = static_cast<std::int64_t>(pieces);
  while (m > 1 && fits(length / static_cast<double>(m - 1))) --m;
  while (!fits(length / static_cast<double>(m))) ++m;
  return m * (n - 1);
}

double index_bound(int n, double C, double length) {
  if (n < 1 || !(C >= 0) || !(length >= 0)) throw Error(ErrorKind::InvalidArgument, "index_bound needs n >= 1, C >= 0, length >= 0");
  return pi * (n + 1) * (1 + 3 * C * length);
}

double triangle_zero_bound(int n, double R, double perimeter) {
  if (n < 1 || !(R >= 0) || !(perimeter >= 0))
    throw Error(ErrorKind::InvalidArgument, "triangle_zero_bound needs n >= 1, R >= 0, perimeter >= 0");
  return 1.5 * (n + 1) * (1 + perimeter * R);
}

int ExponentSet::count() const {
  int total = 0;
  for (const auto& e : entries) {
    if (e.multiplicity < 1) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
    total += e.multiplicity;
  }
  return total;
}

double ExponentSet::diameter() const {
  double d = 0;
  for (const auto& a : entries)
    for (const auto& b : entries) d = std::max(d, std::abs(a.lambda - b.lambda));
  return d;
}

std::int64_t quasipolynomial_bound(const ExponentSet& S) {
  if (S.entries.empty()) throw Error(ErrorKind::InvalidArgument, "empty exponent set");
  for (const auto& e : S.entries)
    if (e.lambda.imag() != 0) throw Error(ErrorKind::NonRealSpectrum, "exponent " + std::to_string(e.lambda.real()) + (e.lambda.imag() < 0 ? "" : "+") + std::to_string(e.lambda.imag()) + "i is not real");
  // the tiny slack keeps exact integers such as 21 from flooring to 20
  return static_cast<std::int64_t>(std::floor(S.count() - 1 + 2 * S.diameter() + 1e-9));
}

cd Quasipolynomial::eval(cd t) const {
  if (t == 0.0) throw Error(ErrorKind::InvalidArgument, "quasipolynomials are not evaluated at 0");
  const cd lg = std::log(t);
  cd acc = 0;
  for (const auto& term : terms) acc += term.coeff * std::exp(term.lambda * lg) * std::pow(lg, term.log_power);
  return acc;
}

ExponentSet Quasipolynomial::exponents() const {
  ExponentSet S;
  for (const auto& term : terms) {
    auto it = std::find_if(S.entries.begin(), S.entries.end(), [&](const auto& e) { return e.lambda == term.lambda; });
    if (it == S.entries.end())
      S.entries.push_back({term.lambda, term.log_power + 1});
    else
      it->multiplicity = std::max(it->multiplicity, term.log_power + 1);
  }
  return S;
}

bool crosses_slit(const Triangle& T) {
  const auto& v = T.vertices();
  if (T.contains(0) || T.boundary_distance(0) == 0) return true;
  for (int k = 0; k < 3; ++k) {
    const cd a = v[k], b = v[(k + 1) % 3];
    if ((a.imag() > 0 && b.imag() > 0) || (a.imag() < 0 && b.imag() < 0)) continue;
    if (a.imag() == b.imag()) {
      if (std::min(a.real(), b.real()) <= 0) return true;
      continue;
    }
    const double s = a.imag() / (a.imag() - b.imag());
    if (a.real() + s * (b.real() - a.real()) <= 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Argument principle

namespace {

struct Walker {
  const std::function<cd(cd)>& f;
  double tube;
  std::size_t budget;
  std::size_t evaluations = 0;

  cd eval(cd z) {
    if (++evaluations > budget) throw Error(ErrorKind::NonConvergent, "boundary refinement exceeds the sample budget");
    const cd w = f(z);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw Error(ErrorKind::NumericalFailure, "function is not finite on the boundary");
    if (w == 0.0) throw Error(ErrorKind::ZeroOnBoundary, "function vanishes on the boundary");
    return w;
  }

  // Adds the phase increments between a and b (values fa, fb) to sum / total.
  void refine(cd a, cd fa, cd b, cd fb, double& sum, double& total) {
    const double inc = std::arg(fb / fa);
    if (std::abs(inc) < pi / 2) {
      sum += inc;
      total += std::abs(inc);
      return;
    }
    if (std::abs(b - a) < tube) throw Error(ErrorKind::ZeroOnBoundary, "a zero lies within the boundary tube");
    const cd m = 0.5 * (a + b);
    const cd fm = eval(m);
    refine(a, fa, m, fm, sum, total);
    refine(m, fm, b, fb, sum, total);
  }

  // Phase change along a polyline through the vertices (closed when `closed`).
  std::pair<double, double> walk(const std::vector<cd>& vertices, bool closed, int samples) {
    double sum = 0, total = 0;
    const size_t edges = closed ? vertices.size() : vertices.size() - 1;
    std::vector<cd> first_values(vertices.size());
    for (size_t k = 0; k < vertices.size(); ++k) first_values[k] = eval(vertices[k]);
    for (size_t e = 0; e < edges; ++e) {
      const cd a = vertices[e], b = vertices[(e + 1) % vertices.size()];
      cd za = a, fa = first_values[e];
      for (int j = 1; j <= samples; ++j) {
        const cd zb = j == samples ? b : a + (static_cast<double>(j) / samples) * (b - a);
        const cd fb = j == samples ? first_values[(e + 1) % vertices.size()] : eval(zb);
        refine(za, fa, zb, fb, sum, total);
        za = zb;
        fa = fb;
      }
    }
    return {sum, total};
  }
};

double polygon_perimeter(const std::vector<cd>& p) {
  double l = 0;
  for (size_t k = 0; k < p.size(); ++k) l += std::abs(p[(k + 1) % p.size()] - p[k]);
  return l;
}

}  // namespace

int argument_principle_count(const std::function<cd(cd)>& f, const std::vector<cd>& polygon, const CountOptions& options) {
  if (polygon.size() < 3) throw Error(ErrorKind::InvalidArgument, "polygon needs at least three vertices");
  if (options.initial_samples < 1) throw Error(ErrorKind::InvalidArgument, "initial_samples must be positive");
  const double tube = options.tube > 0 ? options.tube : 1e-9 * (1 + polygon_perimeter(polygon));
  Walker walker{f, tube, options.max_evaluations};
  int previous = std::numeric_limits<int>::min();
  for (int samples = options.initial_samples;; samples *= 2) {
    const double winding = walker.walk(polygon, true, samples).first / (2 * pi);
    const double rounded = std::round(winding);
    if (std::abs(winding - rounded) >= 0.25)
      throw Error(ErrorKind::NonConvergent, "winding number is not close to an integer");
    const int count = static_cast<int>(rounded);
    if (count == previous) return count;
    previous = count;
  }
}

int argument_principle_count(const std::function<cd(cd)>& f, const Triangle& T, const CountOptions& options) {
  const auto& v = T.vertices();
  return argument_principle_count(f, std::vector<cd>(v.begin(), v.end()), options);
}

double argument_variation(const std::function<cd(cd)>& f, cd a, cd b, const CountOptions& options) {
  if (options.initial_samples < 1) throw Error(ErrorKind::InvalidArgument, "initial_samples must be positive");
  const double tube = options.tube > 0 ? options.tube : 1e-9 * (1 + std::abs(b - a));
  Walker walker{f, tube, options.max_evaluations};
  double previous = -1;
  for (int samples = options.initial_samples;; samples *= 2) {
    const double total = walker.walk({a, b}, false, samples).second;
    if (previous >= 0 && std::abs(total - previous) <= 1e-6 * (1 + total)) return total;
    previous = total;
  }
}

int count_quasipolynomial_zeros(const Quasipolynomial& q, const Triangle& T, const CountOptions& options) {
  if (crosses_slit(T)) throw Error(ErrorKind::SlitCrossing, "triangle meets the branch cut along the negative real axis");
  return argument_principle_count([&q](cd t) { return q.eval(t); }, T, options);
}

}  // namespace pflab
