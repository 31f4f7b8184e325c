// pflab: command-line front end. Every command validates its inputs, runs one pipeline
// step and prints a report-v1 record. Exit status: 0 success, 1 domain error or bad
// input, 2 numerical failure, 3 resource exhaustion.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "pflab/errors.hpp"
#include "pflab/factorize.hpp"
#include "pflab/format.hpp"
#include "pflab/ode_reduction.hpp"
#include "pflab/oval.hpp"
#include "pflab/parse.hpp"
#include "pflab/picard_fuchs.hpp"
#include "pflab/report.hpp"
#include "pflab/transport.hpp"
#include "pflab/zero_counting.hpp"

using namespace pflab;

namespace {

// "@path" reads a file, "@-" standard input; anything else is literal.
std::string read_arg(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::string text;
  if (value == "@-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(value.substr(1), std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + value.substr(1));
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

double parse_real(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v))
    throw Error(ErrorKind::InvalidArgument, what + ": '" + s + "' is not a finite number");
  return v;
}

std::vector<double> parse_reals(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_real(part, what));
  return out;
}

cd parse_point(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, what + ": expected 're,im'");
  return {parse_real(parts[0], what), parse_real(parts[1], what)};
}

std::vector<cd> parse_points(const std::string& s, const std::string& what) {
  std::vector<cd> out;
  for (const auto& p : split(s, ';')) out.push_back(parse_point(p, what));
  return out;
}

// Polynomial in t through the (x, y) grammar.
UPoly parse_upoly(const std::string& text) {
  std::string s = text;
  for (char& c : s) {
    if (c == 'x' || c == 'y') throw Error(ErrorKind::InvalidArgument, "univariate inputs use the variable t");
    if (c == 't') c = 'x';
  }
  const BiPoly p = parse_bipoly(s);
  std::vector<Coefficient> c;
  for (const auto& [m, v] : p.terms()) {
    if (m.s != 0) throw Error(ErrorKind::InvalidArgument, "unexpected variable");
    if (c.size() <= static_cast<size_t>(m.r)) c.resize(static_cast<size_t>(m.r) + 1);
    c[static_cast<size_t>(m.r)] = v;
  }
  return UPoly(std::move(c));
}

// "[[a, b], [c, d]]" of polynomials in t.
std::vector<std::vector<UPoly>> parse_poly_matrix(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 4 || s.front() != '[' || s.back() != ']') throw Error(ErrorKind::InvalidArgument, "matrix must look like [[..],[..]]");
  std::vector<std::vector<UPoly>> rows;
  for (auto row : split(s.substr(1, s.size() - 2), ',')) {
    row = trim(row);
    if (row.size() < 2 || row.front() != '[' || row.back() != ']') throw Error(ErrorKind::InvalidArgument, "matrix rows must be bracketed");
    std::vector<UPoly> r;
    for (const auto& e : split(row.substr(1, row.size() - 2), ',')) r.push_back(parse_upoly(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_points(const std::vector<cd>& pts) {
  std::string out = "[";
  for (size_t k = 0; k < pts.size(); ++k) out += (k ? ", " : "") + format_complex(pts[k]);
  return out + "]";
}

std::string format_coeffs(const std::vector<cd>& c) {
  // trailing coefficients below 1e-15 are dropped
  size_t n = c.size();
  while (n > 1 && std::abs(c[n - 1]) < 1e-15) --n;
  return format_points(std::vector<cd>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n)));
}

struct Globals {
  std::optional<double> tol_integrator, tol_quadrature;
  std::optional<std::uint64_t> max_bits;

  Tolerances resolve() const {
    Tolerances t = Tolerances::from_environment();
    if (tol_integrator) t.integrator = *tol_integrator;
    if (tol_quadrature) t.quadrature = *tol_quadrature;
    if (max_bits) t.max_bits = *max_bits;
    return t;
  }
};

struct SystemInput {
  std::string h;       // Hamiltonian
  std::string system;  // pf-v1 text or @file
};

HyperGeomSystem load_system(const SystemInput& in, Report& r) {
  if (!in.h.empty() == !in.system.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --h and --system");
  if (!in.h.empty()) {
    const std::string h = read_arg(in.h);
    r.input("h", h);
    return derive_system(Hamiltonian(parse_bipoly(h)));
  }
  const std::string text = read_arg(in.system);
  r.input("system", fnv1a64(text));
  return parse_hypergeometric(text);
}

int exit_code(ErrorKind kind) {
  switch (category_of(kind)) {
    case ErrorCategory::Domain: return 1;
    case ErrorCategory::Numerical: return 2;
    case ErrorCategory::Resource: return 3;
    case ErrorCategory::Internal: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard-Fuchs systems, Abelian integrals, monodromy and zero-counting bounds"};
  // --h names the Hamiltonian, so help is --help only; subcommands inherit this
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol-integrator", g.tol_integrator, "integrator relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-quadrature", g.tol_quadrature, "quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-bits", g.max_bits, "bit budget for big-integer recursions")->check(CLI::PositiveNumber);

  // Each command fills `report` and returns whether its check passed.
  std::function<void(Report&, const Tolerances&)> run;
  std::string operation;

  // transversal
  std::string h_text;
  auto* transversal = app.add_subcommand("transversal", "transversality of H to infinity");
  transversal->add_option("--h", h_text, "Hamiltonian, literal or @file")->required();
  transversal->callback([&] {
    operation = "transversal";
    run = [&](Report& r, const Tolerances&) {
      const std::string h = read_arg(h_text);
      r.input("h", h);
      const auto rep = check_transversal(Hamiltonian(parse_bipoly(h)));
      r.value("transversal", std::string(rep.transversal ? "true" : "false"));
      r.value("witness", rep.witness.to_compact_string());
      r.status(rep.transversal);
    };
  });

  // derive-pf
  std::string pf_out;
  auto* derive = app.add_subcommand("derive-pf", "derive the hypergeometric Picard-Fuchs system (tE - A) X' = B X");
  derive->add_option("--h", h_text, "Hamiltonian, literal or @file")->required();
  derive->add_option("--pf-out", pf_out, "also write the system in pf-v1 format to this file");
  derive->callback([&] {
    operation = "derive-pf";
    run = [&](Report& r, const Tolerances&) {
      const std::string h = read_arg(h_text);
      r.input("h", h);
      const HyperGeomSystem sys = derive_system(Hamiltonian(parse_bipoly(h)));
      r.value("n", static_cast<std::int64_t>(sys.basis.n));
      r.value("nu", static_cast<std::int64_t>(sys.basis.nu));
      r.value("A", sys.A.to_string());
      r.value("B", sys.B.to_string());
      r.value("chi", char_adjugate(sys).chi.to_string());
      if (!pf_out.empty()) {
        std::ofstream out(pf_out, std::ios::binary);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + pf_out);
        out << serialize(sys) << "\n";
        r.value("pf-out", pf_out);
      }
    };
  });

  // fuchsian
  SystemInput sys_in;
  double precision = 1e-10;
  auto* fuchsian = app.add_subcommand("fuchsian", "partial fractions of the system: X' = sum A_j/(t - t_j) X");
  fuchsian->add_option("--h", sys_in.h, "Hamiltonian, literal or @file");
  fuchsian->add_option("--system", sys_in.system, "pf-v1 hypergeometric system, literal or @file");
  fuchsian->add_option("--precision", precision, "root precision")->check(CLI::PositiveNumber);
  fuchsian->callback([&] {
    operation = "fuchsian";
    run = [&](Report& r, const Tolerances&) {
      const HyperGeomSystem sys = load_system(sys_in, r);
      r.input("precision", format_real(precision));
      const FuchsianSystem F = to_fuchsian(sys, precision);
      r.value("points", format_points(F.points));
      for (size_t k = 0; k < F.residues.size(); ++k) r.value("residue." + std::to_string(k), format_matrix(F.residues[k]));
    };
  });

  // metrics
  auto* metrics = app.add_subcommand("metrics", "residual norm and spread of the Fuchsian form");
  metrics->add_option("--h", sys_in.h, "Hamiltonian, literal or @file");
  metrics->add_option("--system", sys_in.system, "pf-v1 hypergeometric system, literal or @file");
  metrics->callback([&] {
    operation = "metrics";
    run = [&](Report& r, const Tolerances&) {
      const GeometryMetrics m = geometry_metrics(to_fuchsian(load_system(sys_in, r)));
      r.value("residual-norm", m.residual_norm);
      r.value("spread", m.spread);
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "explicit zero and index bounds");
  bounds->require_subcommand(1);
  int n_order = 1;
  double R = 0, perimeter = 0, C = 0, length = 0, radius = 0;
  std::string c_list, exponents;
  auto* b_triangle = bounds->add_subcommand("triangle", "(3/2)(n+1)(1 + perimeter R)");
  b_triangle->add_option("--n", n_order)->required()->check(CLI::PositiveNumber);
  b_triangle->add_option("--R", R)->required()->check(CLI::NonNegativeNumber);
  b_triangle->add_option("--perimeter", perimeter)->required()->check(CLI::NonNegativeNumber);
  b_triangle->callback([&] {
    operation = "bounds.triangle";
    run = [&](Report& r, const Tolerances&) {
      r.input("n", std::to_string(n_order)).input("R", format_real(R)).input("perimeter", format_real(perimeter));
      r.value("bound", format_compact(triangle_zero_bound(n_order, R, perimeter)));
    };
  });
  auto* b_index = bounds->add_subcommand("index", "pi (n+1)(1 + 3 C length)");
  b_index->add_option("--n", n_order)->required()->check(CLI::PositiveNumber);
  b_index->add_option("--C", C)->required()->check(CLI::NonNegativeNumber);
  b_index->add_option("--length", length)->required()->check(CLI::NonNegativeNumber);
  b_index->callback([&] {
    operation = "bounds.index";
    run = [&](Report& r, const Tolerances&) {
      r.input("n", std::to_string(n_order)).input("C", format_real(C)).input("length", format_real(length));
      r.value("bound", format_compact(index_bound(n_order, C, length)));
    };
  });
  auto* b_disc = bounds->add_subcommand("disconjugacy", "sum c_k r^k / k! < 1");
  b_disc->add_option("--c", c_list, "comma-separated bounds c_1..c_n")->required();
  b_disc->add_option("--r", radius)->required()->check(CLI::NonNegativeNumber);
  b_disc->callback([&] {
    operation = "bounds.disconjugacy";
    run = [&](Report& r, const Tolerances&) {
      const auto c = parse_reals(c_list, "--c");
      r.input("c", c_list).input("r", format_real(radius));
      const auto d = disconjugacy_test(c, radius);
      r.value("disconjugate", std::string(d.disconjugate ? "true" : "false"));
      r.value("margin", d.margin);
      r.status(d.disconjugate);
    };
  });
  auto* b_interval = bounds->add_subcommand("interval", "zeros on an interval by subdivision");
  b_interval->add_option("--c", c_list, "comma-separated bounds c_1..c_n")->required();
  b_interval->add_option("--length", length)->required()->check(CLI::NonNegativeNumber);
  b_interval->callback([&] {
    operation = "bounds.interval";
    run = [&](Report& r, const Tolerances&) {
      const auto c = parse_reals(c_list, "--c");
      r.input("c", c_list).input("length", format_real(length));
      r.value("bound", static_cast<std::int64_t>(interval_zero_bound(c, length)));
    };
  });
  auto* b_quasi = bounds->add_subcommand("quasipolynomial", "floor(#S - 1 + 2 diam S)");
  b_quasi->add_option("--exponents", exponents, "comma-separated lambda[:multiplicity]")->required();
  b_quasi->callback([&] {
    operation = "bounds.quasipolynomial";
    run = [&](Report& r, const Tolerances&) {
      ExponentSet S;
      for (const auto& e : split(exponents, ',')) {
        const auto parts = split(e, ':');
        if (parts.size() > 2) throw Error(ErrorKind::InvalidArgument, "exponent entries are lambda[:multiplicity]");
        const int m = parts.size() == 2 ? static_cast<int>(parse_real(parts[1], "multiplicity")) : 1;
        S.entries.push_back({parse_real(parts[0], "exponent"), m});
      }
      r.input("exponents", exponents);
      r.value("bound", static_cast<std::int64_t>(quasipolynomial_bound(S)));
    };
  });

  // count
  std::string poly_text, quasi_text, triangle_text;
  double tube = 0;
  auto* count = app.add_subcommand("count", "zeros in a triangle by the argument principle");
  count->add_option("--poly", poly_text, "polynomial in t, literal or @file");
  count->add_option("--quasi", quasi_text, "quasipolynomial terms c@lambda[@k] = c t^lambda ln^k t, comma-separated");
  count->add_option("--triangle", triangle_text, "x1,y1;x2,y2;x3,y3")->required();
  count->add_option("--tube", tube, "zero-free boundary tube width")->check(CLI::NonNegativeNumber);
  count->callback([&] {
    operation = "count";
    run = [&](Report& r, const Tolerances&) {
      if (poly_text.empty() == quasi_text.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --poly and --quasi");
      const auto v = parse_points(triangle_text, "--triangle");
      if (v.size() != 3) throw Error(ErrorKind::InvalidArgument, "--triangle needs three vertices");
      const Triangle T(v[0], v[1], v[2]);
      CountOptions opt;
      opt.tube = tube;
      r.input("triangle", triangle_text);
      if (!poly_text.empty()) {
        const std::string text = read_arg(poly_text);
        const UPoly p = parse_upoly(text);
        r.input("poly", text);
        r.value("count", static_cast<std::int64_t>(argument_principle_count([&p](cd t) { return p.eval(t); }, T, opt)));
        return;
      }
      Quasipolynomial q;
      for (const auto& term : split(quasi_text, ',')) {
        const auto parts = split(term, '@');
        if (parts.size() < 2 || parts.size() > 3) throw Error(ErrorKind::InvalidArgument, "quasipolynomial terms are c@lambda[@k]");
        const int k = parts.size() == 3 ? static_cast<int>(parse_real(parts[2], "log power")) : 0;
        if (k < 0) throw Error(ErrorKind::InvalidArgument, "log power must be >= 0");
        q.terms.push_back({parse_real(parts[1], "exponent"), k, parse_real(parts[0], "coefficient")});
      }
      r.input("quasi", quasi_text);
      const int n = count_quasipolynomial_zeros(q, T, opt);
      const auto bound = quasipolynomial_bound(q.exponents());
      r.value("count", static_cast<std::int64_t>(n));
      r.value("bound", static_cast<std::int64_t>(bound));
      r.status(n <= bound);
    };
  });

  // oracle
  std::string form_text, grid_text;
  double t_level = 0, step = 1e-4;
  auto* oracle = app.add_subcommand("oracle", "Abelian integral over a real oval, or Picard-Fuchs verification on a grid");
  oracle->add_option("--h", h_text, "Hamiltonian, literal or @file")->required();
  oracle->add_option("--form", form_text, "1-form [p, q]");
  oracle->add_option("--t", t_level, "level");
  oracle->add_option("--grid", grid_text, "comma-separated levels for verify_pf");
  oracle->add_option("--step", step, "central difference step")->check(CLI::PositiveNumber);
  oracle->callback([&] {
    operation = "oracle";
    run = [&](Report& r, const Tolerances& tol) {
      const std::string h = read_arg(h_text);
      const Hamiltonian H(parse_bipoly(h));
      r.input("h", h);
      if (!grid_text.empty()) {
        const auto grid = parse_reals(grid_text, "--grid");
        r.input("grid", grid_text).input("step", format_real(step));
        const double res = verify_pf(H, derive_system(H), grid, step, std::min(tol.quadrature, 1e-13));
        r.value("residual", res);
        r.tolerance(1e-6);
        r.status(res <= 1e-6);
        return;
      }
      if (form_text.empty()) throw Error(ErrorKind::InvalidArgument, "give --form and --t, or --grid");
      const std::string f = read_arg(form_text);
      const KForm omega = parse_kform(f);
      r.input("form", f).input("t", format_real(t_level));
      const IntegralEstimate e = abelian_integral_estimate(H, sampled(omega), t_level, tol.quadrature);
      r.value("integral", e.value);
      r.value("nodes", static_cast<std::int64_t>(e.nodes));
      r.error_estimate(e.error);
      r.tolerance(tol.quadrature);
      r.status(e.error <= tol.quadrature);
    };
  });

  // monodromy
  std::string euler_text, center_text = "0,0";
  double loop_radius = 1;
  auto* mono = app.add_subcommand("monodromy", "monodromy matrix of a counterclockwise circle, X -> X M");
  mono->add_option("--h", sys_in.h, "Hamiltonian, literal or @file");
  mono->add_option("--system", sys_in.system, "pf-v1 hypergeometric system, literal or @file");
  mono->add_option("--euler", euler_text, "Euler system X' = A/t X, A as 'a,b;c,d'");
  mono->add_option("--center", center_text, "loop center re,im");
  mono->add_option("--radius", loop_radius, "loop radius")->check(CLI::PositiveNumber);
  mono->callback([&] {
    operation = "monodromy";
    run = [&](Report& r, const Tolerances& tol) {
      const cd center = parse_point(center_text, "--center");
      LinearODE ode;
      if (!euler_text.empty()) {
        if (!sys_in.h.empty() || !sys_in.system.empty()) throw Error(ErrorKind::InvalidArgument, "--euler excludes --h and --system");
        const auto rows = split(euler_text, ';');
        const int n = static_cast<int>(rows.size());
        CMatrix A(n, n);
        for (int i = 0; i < n; ++i) {
          const auto row = parse_reals(rows[static_cast<size_t>(i)], "--euler");
          if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidArgument, "--euler must be square");
          for (int j = 0; j < n; ++j) A(i, j) = row[static_cast<size_t>(j)];
        }
        r.input("euler", euler_text);
        ode.dim = n;
        ode.poles = {0.0};
        ode.coefficient = [A](cd t) { return CMatrix(A / t); };
      } else {
        ode = as_ode(to_fuchsian(load_system(sys_in, r)));
      }
      r.input("center", center_text).input("radius", format_real(loop_radius));
      TransportOptions opt;
      opt.tol = tol.integrator;
      const CMatrix M = monodromy(ode, ComplexPath::circle(center, loop_radius), opt);
      r.value("M", format_matrix(M));
      r.value("spectral-condition", std::string(spectral_condition(M) ? "true" : "false"));
      r.tolerance(tol.integrator);
    };
  });

  // chains
  std::string kind = "linear";
  long n_chain = 1, z_level = 0;
  std::string d_text = "1", i_text, x_text = "0", y_text = "0", k_text = "0";
  auto* chains = app.add_subcommand("chains", "ideal chain length bounds and fast-growing recursions");
  chains->add_option("--kind", kind)->check(CLI::IsMember({"linear", "exponential", "word", "ackermann", "tower"}));
  chains->add_option("--n", n_chain);
  chains->add_option("--d", d_text);
  chains->add_option("--i", i_text, "word index (word chains only)");
  chains->add_option("--z", z_level, "Ackermann level");
  chains->add_option("--x", x_text);
  chains->add_option("--y", y_text);
  chains->add_option("--k", k_text, "tower base");
  chains->callback([&] {
    operation = "chains";
    run = [&](Report& r, const Tolerances& tol) {
      auto big = [](const std::string& s, const std::string& what) {
        mpz_class v;
        if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorKind::InvalidArgument, what + " must be an integer");
        return v;
      };
      ResourceBudget budget;
      budget.max_bits = tol.max_bits;
      r.input("kind", kind);
      mpz_class v;
      if (kind == "ackermann") {
        r.input("z", std::to_string(z_level)).input("x", x_text).input("y", y_text);
        v = ackermann(z_level, big(x_text, "--x"), big(y_text, "--y"), budget);
      } else if (kind == "tower") {
        r.input("n", std::to_string(n_chain)).input("k", k_text);
        v = tower(n_chain, big(k_text, "--k"), budget);
      } else {
        r.input("n", std::to_string(n_chain)).input("d", d_text);
        std::optional<mpz_class> i;
        if (kind == "word") {
          r.input("i", i_text);
          i = big(i_text, "--i");
        } else if (!i_text.empty()) {
          throw Error(ErrorKind::InvalidArgument, "--i applies to word chains only");
        }
        const ChainKind ck = kind == "linear" ? ChainKind::Linear : kind == "exponential" ? ChainKind::Exponential : ChainKind::Word;
        v = chain_bound(ck, n_chain, big(d_text, "--d"), i, budget);
      }
      const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
      r.value("bits", static_cast<std::int64_t>(bits));
      if (bits <= 65536)
        r.value("bound", v.get_str());
      else
        r.value("bound-digits", static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 10)));
    };
  });

  // factorize
  std::string samples_text, log_text;
  int nu_in = 0, n_samples = 256;
  double f_tol = 1e-9;
  auto* factorize = app.add_subcommand("factorize", "scalar factorization w = H0^-1 t^nu Hinf on the unit circle");
  factorize->add_option("--samples", samples_text, "'re im' per line (N a power of two), @file or @-");
  factorize->add_option("--log", log_text, "build w = t^nu exp(sum c t^k) from terms re[:im]@k");
  factorize->add_option("--nu", nu_in, "winding of the constructed w");
  factorize->add_option("--n-samples", n_samples, "sample count for --log")->check(CLI::PositiveNumber);
  factorize->add_option("--tol", f_tol)->check(CLI::PositiveNumber);
  factorize->callback([&] {
    operation = "factorize";
    run = [&](Report& r, const Tolerances&) {
      if (samples_text.empty() == log_text.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --samples and --log");
      std::vector<cd> samples;
      std::function<cd(cd)> w;
      if (!samples_text.empty()) {
        const std::string text = read_arg(samples_text);
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
          if (trim(line).empty()) continue;
          std::istringstream ls(line);
          double re = 0, im = 0;
          std::string rest;
          if (!(ls >> re >> im) || (ls >> rest)) throw Error(ErrorKind::InvalidArgument, "sample lines are 're im'");
          samples.emplace_back(re, im);
        }
        r.input("samples", fnv1a64(text));
      } else {
        std::vector<std::pair<cd, int>> terms;
        for (const auto& term : split(log_text, ',')) {
          const auto parts = split(term, '@');
          if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, "log terms are re[:im]@k");
          const auto ri = split(parts[0], ':');
          if (ri.size() > 2) throw Error(ErrorKind::InvalidArgument, "log coefficients are re[:im]");
          const cd c(parse_real(ri[0], "coefficient"), ri.size() == 2 ? parse_real(ri[1], "coefficient") : 0.0);
          const double k = parse_real(parts[1], "frequency");
          if (k != std::round(k)) throw Error(ErrorKind::InvalidArgument, "frequencies must be integers");
          terms.emplace_back(c, static_cast<int>(k));
        }
        r.input("log", log_text).input("nu", std::to_string(nu_in)).input("n-samples", std::to_string(n_samples));
        w = [terms, nu = nu_in](cd t) {
          cd g = 0;
          for (const auto& [c, k] : terms) g += c * std::pow(t, k);
          return std::pow(t, nu) * std::exp(g);
        };
        samples = sample_on_circle(w, n_samples);
      }
      r.input("tol", format_real(f_tol));
      const ScalarFactorization f = scalar_factorize(samples, f_tol);
      r.value("nu", static_cast<std::int64_t>(f.nu));
      r.value("h0", format_coeffs(f.h0));
      r.value("hinf", format_coeffs(f.hinf));
      if (w) {
        double worst = 0;
        for (int j = 0; j < 4096; ++j) {
          const cd t = std::polar(1.0, 2 * std::numbers::pi * j / 4096);
          worst = std::max(worst, std::abs(f.reconstruct(t) - w(t)));
        }
        r.error_estimate(worst);
        r.tolerance(f_tol);
        r.status(worst <= f_tol);
      }
    };
  });

  // reduce
  std::string matrix_text, q0_text;
  auto* reduce = app.add_subcommand("reduce", "scalar equation for a linear functional of X' = A(t) X");
  reduce->add_option("--matrix", matrix_text, "[[a11, a12], [a21, a22]] with entries polynomial in t")->required();
  reduce->add_option("--q0", q0_text, "comma-separated covector entries, polynomial in t (default e1)");
  reduce->callback([&] {
    operation = "reduce";
    run = [&](Report& r, const Tolerances&) {
      const std::string mt = read_arg(matrix_text);
      const auto entries = parse_poly_matrix(mt);
      const LinearSystem sys = LinearSystem::from_entries(entries);
      PolyCovector q0(static_cast<size_t>(sys.dim()));
      if (q0_text.empty()) {
        q0[0] = UPoly(1);
      } else {
        const auto parts = split(q0_text, ',');
        if (static_cast<int>(parts.size()) != sys.dim()) throw Error(ErrorKind::InvalidArgument, "--q0 has the wrong length");
        for (size_t k = 0; k < parts.size(); ++k) q0[k] = parse_upoly(parts[k]);
      }
      r.input("matrix", mt).input("q0", q0_text.empty() ? "e1" : q0_text);
      const ScalarODE ode = reduce_to_scalar(sys, q0);
      r.value("order", static_cast<std::int64_t>(ode.order));
      r.value("equation", ode.to_string());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Report report(operation);
  int status = 0;
  try {
    const Tolerances tol = g.resolve();
    run(report, tol);
  } catch (const Error& e) {
    const std::string kind(to_string(e.kind()));
    std::string message = e.what();
    if (message.starts_with(kind + ": ")) message.erase(0, kind.size() + 2);
    report.error(kind, message);
    status = exit_code(e.kind());
  } catch (const std::exception& e) {
    report.error("NumericalFailure", e.what());
    status = 2;
  }
  std::cout << report.str();
  return status;
}
