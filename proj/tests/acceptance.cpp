// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "fixtures.hpp"
#include "generators.hpp"
#include "pflab/cmatrix.hpp"
#include "pflab/errors.hpp"
#include "pflab/factorize.hpp"
#include "pflab/gradient_division.hpp"
#include "pflab/ode_reduction.hpp"
#include "pflab/oval.hpp"
#include "pflab/parse.hpp"
#include "pflab/picard_fuchs.hpp"
#include "pflab/roots.hpp"
#include "pflab/transport.hpp"
#include "pflab/zero_counting.hpp"

using namespace pflab;

namespace {

const double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

QMatrix random_integer_matrix(std::mt19937_64& rng, int n, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Coefficient(dist(rng));
  return m;
}

// 1 --------------------------------------------------------------------------
Outcome division_soundness() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  int accepted = 0;
  while (accepted < 200) {
    const BiPoly h = testing::random_bipoly(rng, 2 + static_cast<int>(rng() % 4), 3, 0.6);
    if (h.degree() < 2) continue;
    const Hamiltonian H(h);
    if (!check_transversal(H).transversal) continue;
    ++accepted;
    const KForm omega = KForm::two_form(testing::random_bipoly(rng, static_cast<int>(rng() % 13), 5, 0.4));
    const DivisionResult r = divide(H, omega);
    out.require(wedge(H.dh(), r.ratio) + r.remainder == omega, "reconstruction failed");
    out.require(r.remainder.degree() <= 2 * H.n(), "remainder degree above 2n");
    const bool ratio_zero = r.ratio.p().is_zero() && r.ratio.q().is_zero();
    out.require(ratio_zero || r.ratio.degree() <= omega.degree() - h.degree(), "ratio degree too large");
  }
  const double secs = seconds_since(start);
  out.require(secs < 30, "runtime " + fmt("%.1f s", secs));
  if (out.pass) out.detail = "200 pairs exact, " + fmt("%.2f s", secs);
  return out;
}

// 2 --------------------------------------------------------------------------
Outcome circle_pf() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const Hamiltonian H(parse_bipoly("x^2+y^2"));
  const HyperGeomSystem sys = derive_system(H);
  out.require(sys.A.rows() == 1 && sys.A(0, 0) == Coefficient(0) && sys.B(0, 0) == Coefficient(1), "A, B differ from [0], [1]");
  double worst = 0;
  for (double t : {0.5, 1.0, 1.5, 2.0})
    worst = std::max(worst, std::abs(abelian_integral(H, parse_kform("[0, x]"), t, 1e-13) - pi * t));
  out.require(worst < 1e-8, "oracle error " + fmt("%.2e", worst));
  const double secs = seconds_since(start);
  out.require(secs < 5, "runtime " + fmt("%.1f s", secs));
  if (out.pass) out.detail = "A = [0], B = [1], max |oracle - pi t| = " + fmt("%.1e", worst);
  return out;
}

// 3 --------------------------------------------------------------------------
Outcome gelfand_leray() {
  Outcome out;
  const Hamiltonian H(parse_bipoly("x^2+y^2"));
  const SampledForm eta{[](double, double y) { return 0.5 / y; }, [](double, double) { return 0.0; }};
  const GelfandLerayReport r = gelfand_leray_check(H, parse_kform("[y, 0]"), eta, 1.0, 1e-4, 1e-13);
  out.require(std::abs(r.rhs + pi) < 1e-8, "rhs = " + fmt("%.12g", r.rhs));
  out.require(std::abs(r.lhs + pi) < 1e-6, "lhs = " + fmt("%.12g", r.lhs));
  out.require(std::abs(r.lhs - r.rhs) < 1e-6, "|lhs - rhs| = " + fmt("%.2e", std::abs(r.lhs - r.rhs)));
  if (out.pass) out.detail = "rhs + pi = " + fmt("%.1e", r.rhs + pi) + ", |lhs - rhs| = " + fmt("%.1e", std::abs(r.lhs - r.rhs));
  return out;
}

// 4 --------------------------------------------------------------------------
Outcome folium() {
  Outcome out;
  const Hamiltonian H(parse_bipoly("x^3+y^3-3*x*y"));
  const auto start = std::chrono::steady_clock::now();
  const HyperGeomSystem sys = derive_system(H);
  const double secs = seconds_since(start);
  out.require(sys.A.rows() == 6, "system is not 6x6");
  out.require(secs < 60, "derivation took " + fmt("%.1f s", secs));
  std::vector<double> grid;
  for (int k = 0; k < 9; ++k) grid.push_back(-0.9 + 0.1 * k);
  const double residual = verify_pf(H, sys, grid, 1e-4, 1e-13);
  out.require(residual <= 1e-6, "verify_pf residual " + fmt("%.2e", residual));
  double worst = 0;
  for (const auto& root : exact_polynomial_roots(char_adjugate(sys).chi))
    worst = std::max(worst, std::min(std::abs(root.value), std::abs(root.value + 1.0)));
  out.require(worst < 1e-6, "spectrum off {0, -1} by " + fmt("%.2e", worst));
  // the critical values themselves, as an independent confirmation of the set
  for (const auto& v : critical_values(H))
    out.require(std::min(std::abs(v.value), std::abs(v.value + 1.0)) < 1e-9, "critical value outside {0, -1}");
  if (out.pass)
    out.detail = "derived in " + fmt("%.2f s", secs) + ", residual " + fmt("%.1e", residual) + ", spectrum within " +
                 fmt("%.0e", worst) + " of {0, -1}";
  return out;
}

// 5 --------------------------------------------------------------------------
Outcome euler_monodromy() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> U(-1, 1);
  double worst = 0;
  int real_spectra = 0;
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix A(2, 2);
    for (Eigen::Index k = 0; k < 4; ++k) A.data()[k] = U(rng);
    LinearODE ode;
    ode.dim = 2;
    ode.poles = {0.0};
    ode.coefficient = [A](cd t) { return CMatrix(A / t); };
    const CMatrix M = monodromy(ode, ComplexPath::circle(0, 1));
    const CMatrix oracle = CMatrix(A * cd(0, 2 * pi)).exp();
    worst = std::max(worst, (M - oracle).norm());
    Eigen::ComplexEigenSolver<CMatrix> es(A, false);
    const bool real = std::abs(es.eigenvalues()(0).imag()) <= 1e-9 && std::abs(es.eigenvalues()(1).imag()) <= 1e-9;
    real_spectra += real;
    out.require(spectral_condition(M) == real, "spectral_condition disagrees with the spectrum of A");
  }
  out.require(worst < 1e-6, "monodromy error " + fmt("%.2e", worst));
  const double secs = seconds_since(start);
  out.require(secs < 10, "runtime " + fmt("%.1f s", secs));
  if (out.pass)
    out.detail = "max |M - exp(2 pi i A)| = " + fmt("%.1e", worst) + ", " + std::to_string(real_spectra) +
                 "/20 real spectra, " + fmt("%.2f s", secs);
  return out;
}

// 6 --------------------------------------------------------------------------
Outcome vallee_poussin() {
  Outcome out;
  std::mt19937_64 rng(106);
  std::uniform_real_distribution<double> U(-1, 1), start(-1, 1);
  int samples = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 2;
    const auto eq = fixtures::random_equation(rng, n, 2, 3);
    const double t0 = start(rng);
    double r = 1;
    while (!disconjugacy_test(eq.bounds_on(t0, t0 + r), r).disconjugate) r *= 0.5;
    SolutionField field(companion(eq.ode), t0, CMatrix::Identity(n, n));
    const auto bound = interval_zero_bound(eq.bounds_on(t0, t0 + 10 * r), 10 * r);
    for (int s = 0; s < 5; ++s) {
      Eigen::VectorXcd combo(n);
      for (int k = 0; k < n; ++k) combo(k) = U(rng);
      ++samples;
      out.require(fixtures::sign_changes(field, combo, t0, t0 + r, 400) <= n - 1, "more than n - 1 roots on a disconjugate interval");
      out.require(fixtures::sign_changes(field, combo, t0, t0 + 10 * r, 2000) <= bound, "interval_zero_bound exceeded");
    }
  }
  if (out.pass) out.detail = "100 equations, " + std::to_string(samples) + " solutions within both bounds";
  return out;
}

// 7 --------------------------------------------------------------------------
Outcome triangle_bound() {
  Outcome out;
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> U(-1, 1);
  int counted = 0, max_count = 0;
  double min_slack = 1e300;
  for (int sys_index = 0; sys_index < 20; ++sys_index) {
    const QMatrix Aq = random_integer_matrix(rng, 3, 2);
    const PolyCovector q0 = {UPoly(1), UPoly(0), UPoly(0)};
    const ScalarODE ode = reduce_to_scalar(LinearSystem::constant(Aq), q0);
    const int n = ode.order;
    // constant coefficients: the sup on any enclosing disk is |a_i| itself
    double R = 0;
    for (const auto& a : ode.coeffs) R = std::max(R, std::abs(a.eval(cd(0))));
    const CMatrix A = to_complex(Aq);
    // y = e1 . exp(t A) c solves the reduced equation; cross-check against its companion transport
    SolutionField field(companion(ode), 0.0, CMatrix::Identity(n, n));
    {
      const cd z(0.7, -0.4);
      Eigen::Vector3cd c(U(rng), U(rng), U(rng));
      // initial data of y: derivatives q_k . x(0) are the rows of the Krylov matrix
      CMatrix K(n, 3);
      CMatrix row = CMatrix::Zero(1, 3);
      row(0, 0) = 1;
      for (int k = 0; k < n; ++k) {
        K.row(k) = row;
        row = row * A;
      }
      const cd direct = (CMatrix(A * z).exp() * c)(0);
      const cd transported = (field.at(z).row(0) * (K * c))(0);
      out.require(std::abs(direct - transported) < 1e-8 * (1 + std::abs(direct)), "reduced equation disagrees with the system");
    }
    for (int tri = 0; tri < 50; ++tri) {
      const Triangle T = fixtures::random_triangle(rng, 2.0);
      const double bound = triangle_zero_bound(n, R, T.perimeter());
      min_slack = std::min(min_slack, bound);
      for (int attempt = 0; attempt < 5; ++attempt) {
        Eigen::Vector3cd c(cd(U(rng), U(rng)), cd(U(rng), U(rng)), cd(U(rng), U(rng)));
        auto y = [&](cd t) { return (CMatrix(A * t).exp() * c)(0); };
        try {
          const int count = argument_principle_count(y, T);
          ++counted;
          max_count = std::max(max_count, count);
          out.require(count <= bound, "count " + std::to_string(count) + " above " + fmt("%.17g", bound));
          break;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::ZeroOnBoundary) throw;
        }
      }
    }
  }
  out.require(counted >= 950, "too many triangles skipped: " + std::to_string(counted));
  if (out.pass)
    out.detail = std::to_string(counted) + " counts, max " + std::to_string(max_count) + ", smallest bound " +
                 fmt("%.3g", min_slack);
  return out;
}

// 8 --------------------------------------------------------------------------
Outcome quasipolynomial() {
  Outcome out;
  Quasipolynomial q;
  q.terms = {{cd(10), 0, 1.0}, {cd(0), 0, -1.0}};
  const auto bound = quasipolynomial_bound(q.exponents());
  out.require(bound == 21, "bound " + std::to_string(bound));
  const cd u = std::polar(1.0, 2 * pi / 5), v = cd(0, 1) * u;
  const Triangle wedge(0.25 * u - 3.0 * v, 4.0 * u, 0.25 * u + 3.0 * v);
  int known = 0;
  for (int k = 0; k < 10; ++k) known += wedge.contains(std::polar(1.0, 2 * pi * k / 10));
  out.require(known == 5, "constructed triangle holds " + std::to_string(known) + " roots");
  const int count = count_quasipolynomial_zeros(q, wedge);
  out.require(count == 5, "constructed triangle reports " + std::to_string(count));
  std::mt19937_64 rng(108);
  int tested = 0, max_count = 0;
  while (tested < 200) {
    const Triangle T = fixtures::random_triangle(rng, 2.0);
    if (crosses_slit(T)) continue;
    ++tested;
    const int c = count_quasipolynomial_zeros(q, T);
    int expected = 0;
    for (int k = 0; k < 10; ++k) expected += T.contains(std::polar(1.0, 2 * pi * k / 10));
    max_count = std::max(max_count, c);
    out.require(c == expected, "count disagrees with the known roots");
    out.require(c <= bound, "count above the bound");
  }
  if (out.pass) out.detail = "wedge count 5, 200 admissible triangles, max " + std::to_string(max_count) + " <= 21";
  return out;
}

// 9 --------------------------------------------------------------------------
Outcome novikov() {
  Outcome out;
  std::mt19937_64 rng(53);
  const auto fx = fixtures::novikov_fixture(6, rng);
  out.require(fx.certified_sup <= 1, "certified sup " + fmt("%.3g", fx.certified_sup));
  Eigen::Vector2cd x0(1.0, fx.a(fx.base));
  SolutionField field(fx.ode, fx.base, CMatrix(x0));
  const int count = argument_principle_count([&](cd t) { return field.at(t)(1, 0); }, fx.rectangle);
  out.require(count >= 6, "x2 has " + std::to_string(count) + " zeros");
  if (out.pass) out.detail = "sup-norm <= " + fmt("%.3f", fx.certified_sup) + ", x2 zeros " + std::to_string(count);
  return out;
}

// 10 -------------------------------------------------------------------------
Outcome reduction_oracle() {
  Outcome out;
  std::mt19937_64 rng(110);
  int full = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const QMatrix A = random_integer_matrix(rng, 3, 5);
    const ScalarODE ode = reduce_to_scalar(LinearSystem::constant(A), {UPoly(1), UPoly(0), UPoly(0)});
    out.require(ode.order >= 1 && ode.order <= 3, "order " + std::to_string(ode.order));
    const UPoly chi = char_adjugate(A).chi;
    // y^(l) + sum a_i y^(l-i) = 0 has symbol p(s) = s^l + sum a_i s^(l-i)
    std::vector<Coefficient> symbol(static_cast<size_t>(ode.order) + 1);
    symbol[static_cast<size_t>(ode.order)] = Coefficient(1);
    for (int i = 1; i <= ode.order; ++i) {
      const auto& a = ode.coeffs[static_cast<size_t>(i - 1)];
      out.require(a.den() == UPoly(1) && a.num().degree() <= 0, "non-constant coefficient");
      symbol[static_cast<size_t>(ode.order - i)] = a.num().coeff(0);
    }
    const UPoly p(symbol);
    if (ode.order == 3) {
      ++full;
      out.require(p == chi, "order 3 equation is not the characteristic polynomial");
    } else {
      out.require(divmod(chi, p).second.is_zero(), "lower order symbol does not divide chi");
    }
  }
  out.require(full >= 90, "only " + std::to_string(full) + " cyclic covectors");
  if (out.pass) out.detail = std::to_string(full) + "/100 order 3 equal det(sE - A), rest divide it";
  return out;
}

// 11 -------------------------------------------------------------------------
Outcome combinatorics() {
  Outcome out;
  for (long n = 1; n <= 10; ++n)
    for (long d = 1; d <= 100; ++d)
      out.require(chain_bound(ChainKind::Linear, n, d) == ((mpz_class(1) << n) - 1) * d, "linear chain mismatch");
  std::mt19937_64 rng(111);
  std::uniform_int_distribution<int> Z(1, 3), X(0, 12), Y(0, 9);
  for (int k = 0; k < 50; ++k) {
    const long z = Z(rng);
    const mpz_class x = X(rng), y = Y(rng);
    mpz_class expected;
    if (z == 1) expected = x + y;
    if (z == 2) expected = x * y;
    if (z == 3) mpz_pow_ui(expected.get_mpz_t(), x.get_mpz_t(), y.get_ui());
    out.require(ackermann(z, x, y) == expected, "ackermann closed form mismatch");
  }
  out.require(tower(3, 2) == 65536, "tower(3, 2) != 65536");
  int graceful = 0;
  for (long n : {3, 4, 5})
    for (long d = 2; d <= 4; ++d)
      try {
        chain_bound(ChainKind::Word, n, d, mpz_class(2));
        out.require(false, "word chain n = " + std::to_string(n) + " did not exceed the budget");
      } catch (const Error& e) {
        out.require(e.kind() == ErrorKind::ResourceExceeded, "word chain raised " + std::string(to_string(e.kind())));
        ++graceful;
      }
  if (out.pass) out.detail = "1000 linear, 50 ackermann, tower(3,2) = 65536, " + std::to_string(graceful) + " word chains ResourceExceeded";
  return out;
}

// 12 -------------------------------------------------------------------------
Outcome factorization() {
  Outcome out;
  std::mt19937_64 rng(112);
  std::uniform_real_distribution<double> U(-0.3, 0.3);
  std::uniform_int_distribution<int> nu_dist(-3, 3), deg_dist(1, 8);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int deg = deg_dist(rng);
    std::vector<cd> coeff(static_cast<size_t>(2 * deg + 1));
    for (auto& c : coeff) c = cd(U(rng), U(rng));
    const int nu = nu_dist(rng);
    auto w = [&](cd t) {
      cd g = 0;
      for (int k = -deg; k <= deg; ++k) g += coeff[static_cast<size_t>(k + deg)] * std::pow(t, k);
      return std::pow(t, nu) * std::exp(g);
    };
    const auto f = scalar_factorize(sample_on_circle(w, 256), 1e-9);
    out.require(f.nu == nu, "winding " + std::to_string(f.nu) + " != " + std::to_string(nu));
    for (int j = 0; j < 4096; ++j) {
      const cd t = std::polar(1.0, 2 * pi * j / 4096);
      worst = std::max(worst, std::abs(f.reconstruct(t) - w(t)));
    }
  }
  out.require(worst < 1e-8, "reconstruction error " + fmt("%.2e", worst));
  if (out.pass) out.detail = "20 windings exact, max reconstruction error " + fmt("%.1e", worst);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"division soundness", division_soundness},
      {"circle Picard-Fuchs system", circle_pf},
      {"Gelfand-Leray derivative", gelfand_leray},
      {"folium verification", folium},
      {"Euler monodromy", euler_monodromy},
      {"de la Vallee Poussin soundness", vallee_poussin},
      {"triangle bound soundness", triangle_bound},
      {"quasipolynomial t^10 - 1", quasipolynomial},
      {"Novikov fixture", novikov},
      {"reduction oracle", reduction_oracle},
      {"combinatorics", combinatorics},
      {"scalar factorization", factorization},
  };
  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s %2zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
