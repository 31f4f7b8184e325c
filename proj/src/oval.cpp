#include "pflab/oval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "pflab/errors.hpp"
#include "pflab/roots.hpp"

namespace pflab {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
// Irrational offset of the angular grid so that nodes avoid the coordinate axes through
// the center (rational forms such as dx / y stay finite on every node).
constexpr double kPhase = 0.3183098861837907;
constexpr int kMaxNodes = 1 << 20;

struct RealPoly2 {
  // coefficient of x^a y^b, dense
  std::vector<std::vector<double>> c;
  int degree = 0;

  double eval(double x, double y) const {
    double acc = 0;
    for (int a = degree; a >= 0; --a) {
      double row = 0;
      for (int b = degree - a; b >= 0; --b) row = row * y + c[static_cast<size_t>(a)][static_cast<size_t>(b)];
      acc = acc * x + row;
    }
    return acc;
  }
};

RealPoly2 to_real(const BiPoly& p) {
  RealPoly2 out;
  out.degree = std::max(0, static_cast<int>(p.degree()));
  out.c.assign(static_cast<size_t>(out.degree) + 1, std::vector<double>(static_cast<size_t>(out.degree) + 1, 0.0));
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_real()) throw Error(ErrorKind::InvalidArgument, "real oval integrals need real coefficients");
    out.c[static_cast<size_t>(m.r)][static_cast<size_t>(m.s)] = c.re().get_d();
  }
  return out;
}

// Coefficients of H(c + v) as a polynomial in v = (vx, vy).
RealPoly2 shifted(const BiPoly& h, Point2 c) {
  const int d = static_cast<int>(h.degree());
  RealPoly2 out;
  out.degree = d;
  out.c.assign(static_cast<size_t>(d) + 1, std::vector<double>(static_cast<size_t>(d) + 1, 0.0));
  std::vector<std::vector<double>> binom(static_cast<size_t>(d) + 1, std::vector<double>(static_cast<size_t>(d) + 1, 0));
  for (int i = 0; i <= d; ++i) {
    binom[static_cast<size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          (j <= i - 1 ? binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : 0);
  }
  for (const auto& [m, coef] : h.terms()) {
    const double v = coef.re().get_d();
    for (int a = 0; a <= m.r; ++a)
      for (int b = 0; b <= m.s; ++b)
        out.c[static_cast<size_t>(a)][static_cast<size_t>(b)] += v * binom[static_cast<size_t>(m.r)][static_cast<size_t>(a)] *
                                                               binom[static_cast<size_t>(m.s)][static_cast<size_t>(b)] *
                                                               std::pow(c[0], m.r - a) * std::pow(c[1], m.s - b);
  }
  return out;
}

// Level curve {H = t} around a center in polar coordinates.
class RadialSampler {
 public:
  RadialSampler(const Hamiltonian& H, const MorseCenter& center, double t)
      : center_(center), t_(t), local_(shifted(H.h(), center.point)), hx_(to_real(H.h().diff_x())),
        hy_(to_real(H.h().diff_y())), h_(to_real(H.h())) {
    sign_ = center.minimum ? 1.0 : -1.0;
  }

  struct Node {
    double r, dr;      // radius and d r / d theta
    double x, y;       // point
    double dx, dy;     // velocity d/dtheta
  };

  Node at(double theta) const {
    const double ux = std::cos(theta), uy = std::sin(theta);
    const int d = local_.degree;
    std::vector<std::complex<double>> g(static_cast<size_t>(d) + 1);
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b)
        g[static_cast<size_t>(a + b)] += local_.c[static_cast<size_t>(a)][static_cast<size_t>(b)] * std::pow(ux, a) * std::pow(uy, b);
    g[0] -= t_;
    std::vector<double> gr(g.size());
    for (size_t k = 0; k < g.size(); ++k) gr[k] = g[k].real();
    auto eval = [&](double r) {
      double v = 0, dv = 0;
      for (auto it = gr.rbegin(); it != gr.rend(); ++it) {
        dv = dv * r + v;
        v = v * r + *it;
      }
      return std::pair{v, dv};
    };
    double best = std::numeric_limits<double>::infinity();
    for (auto root : polynomial_roots(g)) {
      if (root.real() <= 0) continue;
      if (std::abs(root.imag()) > 1e-6 * (1 + std::abs(root.real()))) continue;
      best = std::min(best, root.real());
    }
    if (!std::isfinite(best)) throw Error(ErrorKind::TraceDiverged, "ray from the center never meets the level curve");
    double r = best;
    for (int k = 0; k < 8; ++k) {
      auto [v, dv] = eval(r);
      if (dv == 0) break;
      const double step = v / dv;
      r -= step;
      if (std::abs(step) <= 1e-16 * r) break;
    }
    // The ray must leave the sublevel (superlevel) region transversally.
    const double x = center_.point[0] + r * ux, y = center_.point[1] + r * uy;
    const double Hx = hx_.eval(x, y), Hy = hy_.eval(x, y);
    const double radial = Hx * ux + Hy * uy;
    const double grad = std::hypot(Hx, Hy);
    if (!(sign_ * radial > 1e-8 * grad) || grad == 0)
      throw Error(ErrorKind::TraceDiverged, "level curve is not star-shaped around the center");
    const double tangential = -Hx * uy + Hy * ux;
    const double dr = -r * tangential / radial;
    return {r, dr, x, y, dr * ux - r * uy, dr * uy + r * ux};
  }

  double residual(double x, double y) const { return std::abs(h_.eval(x, y) - t_); }

 private:
  MorseCenter center_;
  double t_;
  RealPoly2 local_, hx_, hy_, h_;
  double sign_ = 1;
};

MorseCenter choose_center(const Hamiltonian& H, double t, const OvalOptions& options) {
  const auto centers = real_centers(H);
  if (centers.empty()) throw Error(ErrorKind::NoRealOval, "H has no real Morse center");
  std::vector<double> real_values;
  for (const auto& v : critical_values(H))
    if (std::abs(v.value.imag()) <= 1e-9 * (1 + std::abs(v.value))) real_values.push_back(v.value.real());
  std::vector<MorseCenter> admissible;
  for (const auto& c : centers) {
    if (c.minimum ? !(t > c.value) : !(t < c.value)) continue;
    const double lo = std::min(c.value, t), hi = std::max(c.value, t);
    const double eps = 1e-9 * (1 + std::abs(c.value));
    bool blocked = false;
    for (double v : real_values)
      if (std::abs(v - c.value) > eps && v >= lo - eps && v <= hi + eps) blocked = true;
    if (!blocked) admissible.push_back(c);
  }
  if (admissible.empty()) throw Error(ErrorKind::NoRealOval, "no real oval of the level curve at this value");
  if (!options.center_hint) return admissible.front();
  const Point2 hint = *options.center_hint;
  return *std::min_element(admissible.begin(), admissible.end(), [&](const MorseCenter& a, const MorseCenter& b) {
    return std::hypot(a.point[0] - hint[0], a.point[1] - hint[1]) < std::hypot(b.point[0] - hint[0], b.point[1] - hint[1]);
  });
}

}  // namespace

std::vector<MorseCenter> real_centers(const Hamiltonian& H) {
  const BiPoly hx = H.h().diff_x(), hy = H.h().diff_y();
  const BiPoly hxx = hx.diff_x(), hxy = hx.diff_y(), hyy = hy.diff_y();
  for (const auto& [m, c] : H.h().terms())
    if (!c.is_real()) return {};
  std::vector<MorseCenter> out;
  for (const auto& cp : critical_points(H)) {
    const double scale = 1 + std::abs(cp.x) + std::abs(cp.y);
    if (cp.multiplicity != 1) continue;
    if (std::abs(cp.x.imag()) > 1e-8 * scale || std::abs(cp.y.imag()) > 1e-8 * scale) continue;
    const double x = cp.x.real(), y = cp.y.real();
    const double a = hxx.eval(x, y).real(), b = hxy.eval(x, y).real(), d = hyy.eval(x, y).real();
    if (a * d - b * b <= 0) continue;
    out.push_back({{x, y}, H.h().eval(x, y).real(), a > 0});
  }
  std::sort(out.begin(), out.end(), [](const MorseCenter& p, const MorseCenter& q) { return p.point < q.point; });
  return out;
}

double Oval::residual(const Hamiltonian& H) const {
  double worst = 0;
  for (const auto& p : points) worst = std::max(worst, std::abs(H.h().eval(p[0], p[1]).real() - t));
  return worst;
}

Oval trace_oval(const Hamiltonian& H, double t, double tol, const OvalOptions& options) {
  const MorseCenter center = choose_center(H, t, options);
  RadialSampler sampler(H, center, t);
  Oval oval;
  oval.t = t;
  oval.center = center;
  oval.phase = kPhase;
  const int N = std::max(8, options.samples);
  for (int k = 0; k < N; ++k) {
    const auto node = sampler.at(kPhase + kTwoPi * k / N);
    oval.points.push_back({node.x, node.y});
    oval.radii.push_back(node.r);
    if (sampler.residual(node.x, node.y) > tol)
      throw Error(ErrorKind::TraceDiverged, "vertex residual above tolerance");
  }
  return oval;
}

SampledForm sampled(const KForm& omega) {
  if (omega.rank() != 1) throw Error(ErrorKind::InvalidArgument, "expected a 1-form");
  auto p = std::make_shared<RealPoly2>(to_real(omega.p()));
  auto q = std::make_shared<RealPoly2>(to_real(omega.q()));
  return {[p](double x, double y) { return p->eval(x, y); }, [q](double x, double y) { return q->eval(x, y); }};
}

std::vector<IntegralEstimate> oval_integrals(const Hamiltonian& H, const std::vector<SampledForm>& forms, double t,
                                             double tol, const OvalOptions& options) {
  const MorseCenter center = choose_center(H, t, options);
  RadialSampler sampler(H, center, t);
  const size_t m = forms.size();
  std::vector<double> sum(m, 0.0);
  auto accumulate = [&](double theta) {
    const auto node = sampler.at(theta);
    for (size_t i = 0; i < m; ++i) sum[i] += forms[i].p(node.x, node.y) * node.dx + forms[i].q(node.x, node.y) * node.dy;
  };
  int N = std::max(8, std::min(options.samples, 64));
  for (int k = 0; k < N; ++k) accumulate(kPhase + kTwoPi * k / N);
  std::vector<double> prev(m);
  for (size_t i = 0; i < m; ++i) prev[i] = sum[i] * kTwoPi / N;
  for (;;) {
    for (int k = 0; k < N; ++k) accumulate(kPhase + kTwoPi * (k + 0.5) / N);
    N *= 2;
    bool done = true;
    std::vector<IntegralEstimate> out(m);
    for (size_t i = 0; i < m; ++i) {
      const double value = sum[i] * kTwoPi / N;
      out[i] = {value, std::abs(value - prev[i]), N};
      if (!(out[i].error <= tol * std::max(1.0, std::abs(value)))) done = false;
      prev[i] = value;
    }
    if (done && N >= 128) return out;
    if (N >= kMaxNodes) throw Error(ErrorKind::NumericalFailure, "oval quadrature did not converge");
  }
}

IntegralEstimate abelian_integral_estimate(const Hamiltonian& H, const SampledForm& omega, double t, double tol,
                                           const OvalOptions& options) {
  return oval_integrals(H, {omega}, t, tol, options).front();
}

double abelian_integral(const Hamiltonian& H, const KForm& omega, double t, double tol, const OvalOptions& options) {
  return abelian_integral_estimate(H, sampled(omega), t, tol, options).value;
}

namespace {

GelfandLerayReport gl_report(const Hamiltonian& H, const KForm& omega, const SampledForm& eta, double t, double h,
                             double tol, const OvalOptions& options) {
  const SampledForm w = sampled(omega);
  // Integrals at t +- h need to be much tighter than the target for the difference.
  const double qtol = std::min(tol, 1e-13);
  GelfandLerayReport rep;
  const double plus = abelian_integral_estimate(H, w, t + h, qtol, options).value;
  const double minus = abelian_integral_estimate(H, w, t - h, qtol, options).value;
  rep.lhs = (plus - minus) / (2 * h);
  rep.rhs = abelian_integral_estimate(H, eta, t, qtol, options).value;
  rep.residual = std::abs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace

GelfandLerayReport gelfand_leray_check(const Hamiltonian& H, const KForm& omega, const KForm& eta, double t, double h,
                                       double tol, const OvalOptions& options) {
  if (!(ext_d(omega) == wedge(H.dh(), eta)))
    throw Error(ErrorKind::HypothesisViolated, "d(omega) differs from dH ^ eta");
  return gl_report(H, omega, sampled(eta), t, h, tol, options);
}

GelfandLerayReport gelfand_leray_check(const Hamiltonian& H, const KForm& omega, const SampledForm& eta, double t,
                                       double h, double tol, const OvalOptions& options) {
  return gl_report(H, omega, eta, t, h, tol, options);
}

std::vector<double> period_vector(const Hamiltonian& H, const BasisSpec& basis, double t, double tol,
                                  const OvalOptions& options) {
  std::vector<SampledForm> forms;
  for (const auto& w : basis.primitives) forms.push_back(sampled(w));
  std::vector<double> out;
  for (const auto& e : oval_integrals(H, forms, t, tol, options)) out.push_back(e.value);
  return out;
}

double verify_pf(const Hamiltonian& H, const HyperGeomSystem& sys, const std::vector<double>& t_grid, double h,
                 double tol, const OvalOptions& options) {
  const int nu = sys.basis.nu;
  const CMatrix A = to_complex(sys.A), B = to_complex(sys.B);
  // Pin the center chosen at the first grid point for the whole sweep.
  OvalOptions pinned = options;
  if (!t_grid.empty() && !pinned.center_hint) pinned.center_hint = choose_center(H, t_grid.front(), options).point;
  double worst = 0;
  for (double t : t_grid) {
    const auto X = period_vector(H, sys.basis, t, tol, pinned);
    const auto Xp = period_vector(H, sys.basis, t + h, tol, pinned);
    const auto Xm = period_vector(H, sys.basis, t - h, tol, pinned);
    double xnorm = 0, rnorm = 0;
    for (int i = 0; i < nu; ++i) xnorm = std::max(xnorm, std::abs(X[static_cast<size_t>(i)]));
    for (int i = 0; i < nu; ++i) {
      double r = 0;
      for (int j = 0; j < nu; ++j) {
        const double dj = (Xp[static_cast<size_t>(j)] - Xm[static_cast<size_t>(j)]) / (2 * h);
        const double tE_A = (i == j ? t : 0.0) - A(i, j).real();
        r += tE_A * dj - B(i, j).real() * X[static_cast<size_t>(j)];
      }
      rnorm = std::max(rnorm, std::abs(r));
    }
    worst = std::max(worst, xnorm > 0 ? rnorm / xnorm : rnorm);
  }
  return worst;
}

}  // namespace pflab
