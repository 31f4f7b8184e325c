#include "pflab/gradient_division.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "pflab/errors.hpp"
#include "pflab/roots.hpp"
#include "pflab/upoly.hpp"

namespace pflab {

Hamiltonian::Hamiltonian(BiPoly h) : h_(std::move(h)) {
  const Degree d = h_.degree();
  if (d <= 1) throw Error(ErrorKind::DegreeTooLow, "Hamiltonian must have degree >= 2");
  n_ = d - 1;
  principal_ = h_.homogeneous_part(d);
  dh_ = ext_d(KForm::function(h_));
}

QMatrix sylvester_map_matrix(const Hamiltonian& H) {
  const int n = H.n();
  const BiPoly lx = H.principal().diff_x();
  const BiPoly ly = H.principal().diff_y();
  QMatrix m(2 * n, 2 * n);
  // dL ^ (u dx + v dy) = (L_x v - L_y u) dx^dy; target monomial x^{2n-1-row} y^row.
  for (int k = 0; k < n; ++k) {
    const BiPoly mono = BiPoly::monomial(n - 1 - k, k);
    const BiPoly from_u = -(ly * mono);
    const BiPoly from_v = lx * mono;
    for (const auto& [mon, c] : from_u.terms()) m(mon.s, k) = c;
    for (const auto& [mon, c] : from_v.terms()) m(mon.s, n + k) = c;
  }
  return m;
}

TransversalityReport check_transversal(const Hamiltonian& H) {
  TransversalityReport report;
  report.witness = determinant(sylvester_map_matrix(H));
  report.transversal = !report.witness.is_zero();
  return report;
}

GradientDivider::GradientDivider(const Hamiltonian& H) : H_(H) {
  const int n = H.n();
  const QMatrix m = sylvester_map_matrix(H);
  ratio_.reserve(static_cast<size_t>(2 * n));
  for (int target = 0; target < 2 * n; ++target) {
    std::vector<Coefficient> rhs(static_cast<size_t>(2 * n), Coefficient(0));
    rhs[static_cast<size_t>(target)] = Coefficient(1);
    auto sol = solve_linear(m, rhs);
    if (!sol) throw Error(ErrorKind::NonTransversal, "principal part has a repeated linear factor");
    BiPoly u, v;
    for (int k = 0; k < n; ++k) {
      u.add_term(n - 1 - k, k, (*sol)[static_cast<size_t>(k)]);
      v.add_term(n - 1 - k, k, (*sol)[static_cast<size_t>(n + k)]);
    }
    ratio_.emplace_back(std::move(u), std::move(v));
  }
  // A singular block still admits solutions for some targets; verify the full inverse.
  if (determinant(m).is_zero()) throw Error(ErrorKind::NonTransversal, "Sylvester block is singular");
}

DivisionResult GradientDivider::divide(const KForm& omega) const {
  if (omega.rank() != 2) throw Error(ErrorKind::InvalidArgument, "divide expects a 2-form");
  const int n = H_.n();
  const int top = 2 * n - 1;  // coefficient degree of 2-forms of degree 2n + 1
  const BiPoly& hx = H_.dh().p();
  const BiPoly& hy = H_.dh().q();
  BiPoly w = omega.scalar();
  BiPoly u_total, v_total;
  while (w.degree() >= top) {
    const int d = w.degree();
    BiPoly u_step, v_step;
    const BiPoly leading = w.homogeneous_part(d);
    for (const auto& [mon, c] : leading.terms()) {
      // Peel x-powers first: x^a y^b = x^{a'} y^{b'} * x^{a-a'} y^{b-b'} with the
      // second factor of degree exactly 2n - 1.
      const int excess = d - top;
      const int a_shift = std::min(mon.r, excess);
      const int b_shift = excess - a_shift;
      const int target = mon.s - b_shift;  // index of x^{top-target} y^{target}
      const BiPoly factor = BiPoly::monomial(a_shift, b_shift, c);
      const auto& [u0, v0] = ratio_[static_cast<size_t>(target)];
      u_step += factor * u0;
      v_step += factor * v0;
    }
    // w <- w - (H_x v - H_y u)
    w -= hx * v_step - hy * u_step;
    if (w.degree() >= d) throw Error(ErrorKind::InternalDegreeViolation, "division step did not lower the degree");
    u_total += u_step;
    v_total += v_step;
  }
  return {KForm::one_form(std::move(u_total), std::move(v_total)), KForm::two_form(std::move(w))};
}

DivisionResult divide(const Hamiltonian& H, const KForm& omega) { return GradientDivider(H).divide(omega); }

// ---------------------------------------------------------------------------
// Critical points

namespace {

using cd = std::complex<double>;

// Bivariate polynomial viewed in Q(i)[x][y]: entry j is the coefficient of y^j.
std::vector<UPoly> as_poly_in_y(const BiPoly& p) {
  std::vector<UPoly> out;
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<int>(out.size()) <= m.s) out.resize(static_cast<size_t>(m.s) + 1);
    out[static_cast<size_t>(m.s)] += UPoly::monomial(m.r, c);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// Resultant in y of two polynomials with coefficients in Q(i)[x], by Bareiss elimination
// on the Sylvester matrix.
UPoly resultant_in_y(const std::vector<UPoly>& f, const std::vector<UPoly>& g) {
  const int df = static_cast<int>(f.size()) - 1;
  const int dg = static_cast<int>(g.size()) - 1;
  if (df < 0 || dg < 0) return UPoly();
  const int size = df + dg;
  if (size == 0) return UPoly(1);
  std::vector<std::vector<UPoly>> m(static_cast<size_t>(size), std::vector<UPoly>(static_cast<size_t>(size)));
  for (int i = 0; i < dg; ++i)
    for (int k = 0; k <= df; ++k) m[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = f[static_cast<size_t>(df - k)];
  for (int i = 0; i < df; ++i)
    for (int k = 0; k <= dg; ++k)
      m[static_cast<size_t>(dg + i)][static_cast<size_t>(i + k)] = g[static_cast<size_t>(dg - k)];
  UPoly prev(1);
  bool negate = false;
  for (int k = 0; k < size - 1; ++k) {
    if (m[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < size; ++i)
        if (!m[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return UPoly();
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(p)]);
      negate = !negate;
    }
    const UPoly& pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < size; ++i) {
      auto& row = m[static_cast<size_t>(i)];
      for (int j = k + 1; j < size; ++j)
        row[static_cast<size_t>(j)] =
            exact_div(row[static_cast<size_t>(j)] * pivot - row[static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)], prev);
      row[static_cast<size_t>(k)] = UPoly();
    }
    prev = pivot;
  }
  UPoly r = m.back().back();
  return negate ? -r : r;
}

// Evaluates a polynomial in y whose coefficients are polynomials in x at x = x0.
std::vector<cd> specialize_x(const std::vector<UPoly>& p, cd x0) {
  std::vector<cd> out;
  for (const auto& c : p) out.push_back(c.eval(x0));
  return out;
}

cd eval_poly(const std::vector<cd>& c, cd z) {
  cd acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void newton_polish(const BiPoly& hx, const BiPoly& hy, const BiPoly& hxx, const BiPoly& hxy, const BiPoly& hyy,
                   cd& x, cd& y, double precision) {
  auto residual = [&](cd a, cd b) { return std::max(std::abs(hx.eval(a, b)), std::abs(hy.eval(a, b))); };
  double res = residual(x, y);
  for (int iter = 0; iter < 60; ++iter) {
    const cd f1 = hx.eval(x, y), f2 = hy.eval(x, y);
    const cd a = hxx.eval(x, y), b = hxy.eval(x, y), d = hyy.eval(x, y);
    const cd det = a * d - b * b;
    if (std::abs(det) == 0) return;
    const cd dx = (d * f1 - b * f2) / det;
    const cd dy = (a * f2 - b * f1) / det;
    const cd nx = x - dx, ny = y - dy;
    const double nres = residual(nx, ny);
    if (!(nres <= res * 1.5 + 1e-300)) return;
    x = nx;
    y = ny;
    res = nres;
    if (std::abs(dx) + std::abs(dy) < precision * (1 + std::abs(x) + std::abs(y))) return;
  }
}

const Rational kShears[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(2),
                            Rational(-1, 3), Rational(3, 7), Rational(-5, 4), Rational(7, 3)};

}  // namespace

std::vector<CriticalPoint> critical_points(const Hamiltonian& H, double precision) {
  if (!check_transversal(H).transversal)
    throw Error(ErrorKind::NonTransversal, "critical points require a Hamiltonian transversal to infinity");
  const int n = H.n();
  const int mu = n * n;

  // Shear x -> x + a y so that H_y has constant leading coefficient in y and, when
  // possible, distinct critical points have distinct x-coordinates (square-free resultant).
  struct Candidate {
    Rational shear;
    UPoly resultant;
    std::vector<UPoly> fx, fy;
  };
  std::optional<Candidate> chosen;
  for (const Rational& a : kShears) {
    if (H.principal().eval_exact(Coefficient(a), Coefficient(1)).is_zero()) continue;
    BiPoly sheared = H.h().compose(BiPoly::x() + BiPoly::y() * Coefficient(a), BiPoly::y());
    Candidate cand{a, UPoly(), as_poly_in_y(sheared.diff_x()), as_poly_in_y(sheared.diff_y())};
    cand.resultant = resultant_in_y(cand.fx, cand.fy);
    if (cand.resultant.degree() != mu) continue;
    const bool squarefree = gcd(cand.resultant, cand.resultant.derivative()).degree() == 0;
    if (!chosen) chosen = cand;
    if (squarefree) {
      chosen = std::move(cand);
      break;
    }
  }
  if (!chosen) throw Error(ErrorKind::NumericalFailure, "no admissible projection for elimination");

  const BiPoly hx = H.h().diff_x(), hy = H.h().diff_y();
  const BiPoly hxx = hx.diff_x(), hxy = hx.diff_y(), hyy = hy.diff_y();
  const double shear = chosen->shear.get_d();
  std::vector<CriticalPoint> out;
  for (const auto& root : exact_polynomial_roots(chosen->resultant)) {
    const cd xs = root.value;
    const std::vector<cd> fy = specialize_x(chosen->fy, xs);
    const std::vector<cd> fx = specialize_x(chosen->fx, xs);
    cd best_y = 0;
    double best = std::numeric_limits<double>::infinity();
    for (cd yc : polynomial_roots(fy)) {
      const double r = std::abs(eval_poly(fx, yc));
      if (r < best) {
        best = r;
        best_y = yc;
      }
    }
    if (!std::isfinite(best)) throw Error(ErrorKind::NumericalFailure, "back-substitution failed");
    cd x = xs + shear * best_y;
    cd y = best_y;
    newton_polish(hx, hy, hxx, hxy, hyy, x, y, precision);
    CriticalPoint cp;
    cp.x = x;
    cp.y = y;
    cp.value = H.h().eval(x, y);
    cp.multiplicity = root.multiplicity;
    cp.gradient_residual = std::max(std::abs(hx.eval(x, y)), std::abs(hy.eval(x, y)));
    out.push_back(cp);
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.value != b.value) return complex_less(a.value, b.value);
    if (a.x != b.x) return complex_less(a.x, b.x);
    return complex_less(a.y, b.y);
  });
  return out;
}

std::vector<CriticalValue> critical_values(const Hamiltonian& H, double precision) {
  std::vector<CriticalValue> out;
  for (const auto& cp : critical_points(H, precision)) {
    auto it = std::find_if(out.begin(), out.end(), [&](const CriticalValue& v) {
      return std::abs(v.value - cp.value) <= kCriticalValueMergeTolerance * (1 + std::abs(v.value));
    });
    if (it == out.end()) {
      out.push_back({cp.value, cp.multiplicity, cp.gradient_residual});
    } else {
      it->multiplicity += cp.multiplicity;
      it->gradient_residual = std::max(it->gradient_residual, cp.gradient_residual);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CriticalValue& a, const CriticalValue& b) { return complex_less(a.value, b.value); });
  return out;
}

}  // namespace pflab
