#include "pflab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/numeric/odeint.hpp>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "pflab/errors.hpp"
#include "pflab/roots.hpp"

namespace pflab {

namespace odeint = boost::numeric::odeint;

// ---------------------------------------------------------------------------
// Paths

PathSegment PathSegment::line(cd a, cd b) {
  PathSegment s;
  s.kind = Kind::Line;
  s.start = a;
  s.end = b;
  return s;
}

PathSegment PathSegment::arc(cd center, double radius, double angle0, double sweep) {
  if (!(radius > 0)) throw Error(ErrorKind::InvalidArgument, "arc radius must be positive");
  PathSegment s;
  s.kind = Kind::Arc;
  s.center = center;
  s.radius = radius;
  s.angle0 = angle0;
  s.sweep = sweep;
  s.start = s.point(0);
  s.end = s.point(1);
  return s;
}

cd PathSegment::point(double s) const {
  if (kind == Kind::Line) return start + s * (end - start);
  return center + std::polar(radius, angle0 + s * sweep);
}

cd PathSegment::velocity(double s) const {
  if (kind == Kind::Line) return end - start;
  return cd(0, sweep) * std::polar(radius, angle0 + s * sweep);
}

double PathSegment::length() const {
  return kind == Kind::Line ? std::abs(end - start) : radius * std::abs(sweep);
}

double PathSegment::distance_to(cd q) const {
  if (kind == Kind::Line) {
    const cd v = end - start;
    const double len2 = std::norm(v);
    double s = len2 > 0 ? std::real((q - start) * std::conj(v)) / len2 : 0;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(q - point(s));
  }
  const cd rel = q - center;
  const double r = std::abs(rel);
  double best = std::min(std::abs(q - point(0)), std::abs(q - point(1)));
  if (r > 0) {
    // Closest circle point lies at arg(rel); check whether it is on the arc.
    double a = std::arg(rel) - angle0;
    const double two_pi = 2 * std::numbers::pi;
    if (sweep >= 0) {
      a = std::fmod(std::fmod(a, two_pi) + two_pi, two_pi);
      if (a <= sweep) best = std::min(best, std::abs(r - radius));
    } else {
      a = std::fmod(std::fmod(-a, two_pi) + two_pi, two_pi);
      if (a <= -sweep) best = std::min(best, std::abs(r - radius));
    }
  } else {
    best = radius;
  }
  return best;
}

ComplexPath::ComplexPath(std::vector<PathSegment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw Error(ErrorKind::InvalidArgument, "path needs at least one segment");
  for (size_t k = 1; k < segments_.size(); ++k) {
    const cd gap = segments_[k].begin() - segments_[k - 1].finish();
    const double scale = 1 + std::abs(segments_[k].begin());
    if (std::abs(gap) > 1e-12 * scale) throw Error(ErrorKind::InvalidArgument, "path segments are not connected");
  }
}

ComplexPath ComplexPath::circle(cd center, double radius, double angle0) {
  return ComplexPath({PathSegment::arc(center, radius, angle0, 2 * std::numbers::pi)});
}

ComplexPath ComplexPath::polygon(const std::vector<cd>& vertices) {
  if (vertices.size() < 2) throw Error(ErrorKind::InvalidArgument, "polygon needs at least two vertices");
  std::vector<PathSegment> segs;
  for (size_t k = 0; k < vertices.size(); ++k)
    segs.push_back(PathSegment::line(vertices[k], vertices[(k + 1) % vertices.size()]));
  return ComplexPath(std::move(segs));
}

bool ComplexPath::closed() const {
  return std::abs(end() - start()) <= 1e-12 * (1 + std::abs(start()));
}

double ComplexPath::min_distance(const std::vector<cd>& poles) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& seg : segments_)
    for (const auto& p : poles) d = std::min(d, seg.distance_to(p));
  return d;
}

ComplexPath ComplexPath::then(const ComplexPath& next) const {
  std::vector<PathSegment> segs = segments_;
  segs.insert(segs.end(), next.segments_.begin(), next.segments_.end());
  return ComplexPath(std::move(segs));
}

// ---------------------------------------------------------------------------
// Systems

LinearODE as_ode(const FuchsianSystem& F) {
  LinearODE ode;
  ode.dim = F.dim();
  ode.poles = F.points;
  ode.coefficient = [F](cd t) { return F.coefficient(t); };
  return ode;
}

LinearODE as_ode(const LinearSystem& sys) {
  LinearODE ode;
  ode.dim = sys.dim();
  ode.coefficient = [sys](cd t) { return sys.eval(t); };
  return ode;
}

LinearODE companion(const ScalarODE& eq) {
  const int l = eq.order;
  if (l < 1 || static_cast<int>(eq.coeffs.size()) != l) throw Error(ErrorKind::InvalidArgument, "malformed scalar equation");
  auto to_vec = [](const UPoly& p) {
    std::vector<cd> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k).to_complex());
    return c;
  };
  // numerator and denominator coefficients, converted once
  std::vector<std::pair<std::vector<cd>, std::vector<cd>>> a;
  LinearODE ode;
  ode.dim = l;
  for (const auto& f : eq.coeffs) {
    a.emplace_back(to_vec(f.num()), to_vec(f.den()));
    if (f.den().degree() >= 1)
      for (const auto& r : polynomial_roots(a.back().second)) ode.poles.push_back(r);
  }
  ode.coefficient = [a, l](cd t) {
    auto horner = [t](const std::vector<cd>& c) {
      cd acc = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
      return acc;
    };
    CMatrix A = CMatrix::Zero(l, l);
    for (int i = 0; i + 1 < l; ++i) A(i, i + 1) = 1;
    for (int i = 1; i <= l; ++i) {
      const auto& [num, den] = a[static_cast<size_t>(i - 1)];
      A(l - 1, l - i) = -horner(num) / horner(den);
    }
    return A;
  };
  return ode;
}

namespace {

using State = std::vector<double>;

// Complex vector <-> interleaved real state.
void pack(const CMatrix& X, State& s) {
  s.resize(static_cast<size_t>(2 * X.size()));
  for (Eigen::Index k = 0; k < X.size(); ++k) {
    s[static_cast<size_t>(2 * k)] = X.data()[k].real();
    s[static_cast<size_t>(2 * k + 1)] = X.data()[k].imag();
  }
}

void unpack(const State& s, CMatrix& X) {
  for (Eigen::Index k = 0; k < X.size(); ++k)
    X.data()[k] = cd(s[static_cast<size_t>(2 * k)], s[static_cast<size_t>(2 * k + 1)]);
}

// Integrates y' = f(s, y) over s in [0, 1] with the step bounded by max_step(s, y).
template <class Rhs, class MaxStep>
State integrate_unit(Rhs rhs, State y, MaxStep max_step, const TransportOptions& opt) {
  auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(opt.tol * 1e-2, opt.tol);
  auto system = [&](const State& x, State& dx, double s) { rhs(s, x, dx); };
  double s = 0;
  double ds = std::min(1e-2, max_step(0.0, y));
  while (s < 1) {
    const double cap = max_step(s, y);
    ds = std::min({ds, cap, 1 - s});
    if (ds < opt.min_step) throw Error(ErrorKind::StepUnderflow, "integrator step fell below the minimum");
    const double before = s;
    if (stepper.try_step(system, y, s, ds) == odeint::success) {
      if (1 - s < 1e-15) s = 1;
    } else if (s != before) {
      throw Error(ErrorKind::NumericalFailure, "integrator state inconsistent");
    }
    for (double v : y)
      if (!std::isfinite(v)) throw Error(ErrorKind::StepUnderflow, "integrator produced non-finite values");
  }
  return y;
}

double pole_distance(cd z, const std::vector<cd>& poles) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : poles) d = std::min(d, std::abs(z - p));
  return d;
}

}  // namespace

CMatrix integrate_along_path(const LinearODE& ode, const ComplexPath& path, const CMatrix& X0,
                             const TransportOptions& options) {
  if (X0.rows() != ode.dim) throw Error(ErrorKind::InvalidArgument, "initial matrix has the wrong row count");
  const double dist = path.min_distance(ode.poles);
  if (dist < options.min_pole_distance || dist == 0)
    throw Error(ErrorKind::PathTooClose, "path passes within " + std::to_string(dist) + " of a pole");
  CMatrix X = X0;
  State y;
  pack(X, y);
  CMatrix Xs(X0.rows(), X0.cols()), dX(X0.rows(), X0.cols());
  for (const auto& seg : path.segments()) {
    auto rhs = [&](double s, const State& in, State& out) {
      unpack(in, Xs);
      dX = ode.coefficient(seg.point(s)) * seg.velocity(s) * Xs;
      pack(dX, out);
    };
    auto max_step = [&](double s, const State&) {
      const double speed = std::abs(seg.velocity(s));
      if (speed == 0 || ode.poles.empty()) return 1.0;
      return options.pole_step_fraction * pole_distance(seg.point(s), ode.poles) / speed;
    };
    y = integrate_unit(rhs, y, max_step, options);
  }
  unpack(y, X);
  return X;
}

SolutionField::SolutionField(LinearODE ode, cd base, CMatrix X0, TransportOptions options)
    : ode_(std::move(ode)), options_(options) {
  if (X0.rows() != ode_.dim) throw Error(ErrorKind::InvalidArgument, "initial matrix has the wrong row count");
  cache_.emplace_back(base, std::move(X0));
}

const CMatrix& SolutionField::at(cd z) {
  size_t best = 0;
  double dist = std::abs(z - cache_[0].first);
  for (size_t k = 1; k < cache_.size(); ++k) {
    const double d = std::abs(z - cache_[k].first);
    if (d < dist) {
      dist = d;
      best = k;
    }
  }
  if (dist == 0) return cache_[best].second;
  CMatrix X = integrate_along_path(ode_, ComplexPath({PathSegment::line(cache_[best].first, z)}), cache_[best].second,
                                   options_);
  cache_.emplace_back(z, std::move(X));
  return cache_.back().second;
}

CMatrix monodromy(const LinearODE& ode, const ComplexPath& loop, const CMatrix& X0, const TransportOptions& options) {
  if (!loop.closed()) throw Error(ErrorKind::InvalidArgument, "monodromy needs a closed loop");
  Eigen::FullPivLU<CMatrix> lu(X0);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularMatrix, "initial fundamental matrix is singular");
  return lu.solve(integrate_along_path(ode, loop, X0, options));
}

CMatrix monodromy(const LinearODE& ode, const ComplexPath& loop, const TransportOptions& options) {
  return monodromy(ode, loop, CMatrix::Identity(ode.dim, ode.dim), options);
}

bool spectral_condition(const CMatrix& M, double tol) {
  if (M.rows() != M.cols() || M.rows() == 0) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
  Eigen::JacobiSVD<CMatrix> svd(M);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * std::max(1.0, sv(0)))
    throw Error(ErrorKind::SingularMatrix, "monodromy matrix is numerically singular");
  Eigen::ComplexEigenSolver<CMatrix> es(M, false);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double m = std::abs(es.eigenvalues()(k));
    if (m < 1 - tol || m > 1 + tol) return false;
  }
  return true;
}

std::pair<cd, CMatrix> rescaled_transport(const CharAdjugate& ca, const QMatrix& B, cd t0, cd T, const CMatrix& X0,
                                          const TransportOptions& options) {
  const int n = static_cast<int>(B.rows());
  if (X0.rows() != n) throw Error(ErrorKind::InvalidArgument, "initial matrix has the wrong row count");
  const CMatrix Bc = to_complex(B);
  std::vector<std::complex<double>> chi;
  for (int k = 0; k <= ca.chi.degree(); ++k) chi.push_back(ca.chi.coeff(k).to_complex());
  auto chi_at = [&](cd t) {
    cd acc = 0;
    for (auto it = chi.rbegin(); it != chi.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  // State: t followed by the entries of X; tau = s T.
  State y(2 + static_cast<size_t>(2 * X0.size()));
  y[0] = t0.real();
  y[1] = t0.imag();
  CMatrix X = X0, dX(X0.rows(), X0.cols());
  {
    State tail;
    pack(X0, tail);
    std::copy(tail.begin(), tail.end(), y.begin() + 2);
  }
  auto rhs = [&](double, const State& in, State& out) {
    const cd t(in[0], in[1]);
    const State tail(in.begin() + 2, in.end());
    unpack(tail, X);
    const cd dt = chi_at(t) * T;
    dX = ca.eval_P(t) * Bc * X * T;
    State dtail;
    pack(dX, dtail);
    out.resize(in.size());
    out[0] = dt.real();
    out[1] = dt.imag();
    std::copy(dtail.begin(), dtail.end(), out.begin() + 2);
  };
  auto max_step = [](double, const State&) { return 1.0; };
  y = integrate_unit(rhs, y, max_step, options);
  unpack(State(y.begin() + 2, y.end()), X);
  return {cd(y[0], y[1]), X};
}

}  // namespace pflab
