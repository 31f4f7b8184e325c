#include "pflab/picard_fuchs.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "pflab/errors.hpp"
#include "pflab/parse.hpp"
#include "pflab/roots.hpp"

namespace pflab {

using cd = std::complex<double>;

int BasisSpec::index_of(Monomial m) const {
  auto it = std::find(monomials.begin(), monomials.end(), m);
  return it == monomials.end() ? -1 : static_cast<int>(it - monomials.begin());
}

BasisSpec build_basis(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "basis requires n >= 1");
  BasisSpec b;
  b.n = n;
  for (int d = 0; d <= 2 * n - 2; ++d)
    for (int s = 0; s <= d; ++s) {
      const int r = d - s;
      b.monomials.push_back({r, s});
      b.primitives.push_back(KForm::one_form(BiPoly(), BiPoly::monomial(r + 1, s, Coefficient::ratio(1, r + 1))));
    }
  b.nu = static_cast<int>(b.monomials.size());
  return b;
}

namespace {

// Coordinates of a 2-form of coefficient degree <= 2n - 2 in the monomial basis.
void fill_row(QMatrix& m, int row, const BiPoly& coeff, const BasisSpec& basis) {
  for (const auto& [mon, c] : coeff.terms()) {
    const int j = basis.index_of(mon);
    if (j < 0) throw Error(ErrorKind::InternalDegreeViolation, "form escapes the remainder space");
    m(row, j) = c;
  }
}

}  // namespace

HyperGeomSystem derive_system(const Hamiltonian& H) {
  GradientDivider divider(H);
  HyperGeomSystem sys;
  sys.hamiltonian = H.h();
  sys.basis = build_basis(H.n());
  const int nu = sys.basis.nu;
  sys.A = QMatrix(nu, nu);
  sys.B = QMatrix(nu, nu);
  for (int i = 0; i < nu; ++i) {
    const Monomial m = sys.basis.monomials[static_cast<size_t>(i)];
    const KForm omega = KForm::two_form(H.h() * BiPoly::monomial(m.r, m.s));
    const DivisionResult res = divider.divide(omega);
    fill_row(sys.A, i, res.remainder.scalar(), sys.basis);
    const KForm deta = ext_d(res.ratio);
    if (deta.degree() > 2 * H.n()) throw Error(ErrorKind::InternalDegreeViolation, "d(eta) exceeds degree 2n");
    fill_row(sys.B, i, deta.scalar(), sys.basis);
  }
  return sys;
}

CMatrix CharAdjugate::eval_P(cd t) const {
  CMatrix acc = CMatrix::Zero(P.front().rows(), P.front().cols());
  for (auto it = P.rbegin(); it != P.rend(); ++it) acc = acc * t + to_complex(*it);
  return acc;
}

CharAdjugate char_adjugate(const QMatrix& A) {
  const int nu = A.rows();
  if (nu != A.cols() || nu == 0) throw Error(ErrorKind::InvalidArgument, "char_adjugate expects a square matrix");
  // Faddeev-LeVerrier: M_1 = E, c_{nu-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{nu-k} E.
  std::vector<Coefficient> c(static_cast<size_t>(nu) + 1);
  c[static_cast<size_t>(nu)] = Coefficient(1);
  std::vector<QMatrix> M;
  M.push_back(QMatrix::identity(nu));
  for (int k = 1; k <= nu; ++k) {
    const QMatrix AM = A * M.back();
    const Coefficient ck = -(AM.trace() * Coefficient::ratio(1, k));
    c[static_cast<size_t>(nu - k)] = ck;
    if (k < nu) M.push_back(AM + ck * QMatrix::identity(nu));
  }
  CharAdjugate out;
  out.chi = UPoly(c);
  // P(t) = sum_{k=1}^{nu} t^{nu-k} M_k
  out.P.resize(static_cast<size_t>(nu));
  for (int k = 1; k <= nu; ++k) out.P[static_cast<size_t>(nu - k)] = M[static_cast<size_t>(k - 1)];
  return out;
}

bool check_adjugate_identity(const QMatrix& A, const CharAdjugate& ca) {
  const int nu = A.rows();
  const int deg = static_cast<int>(ca.P.size());
  // (tE - A) P(t) = sum_k t^{k+1} P_k - sum_k t^k A P_k
  for (int k = 0; k <= deg; ++k) {
    QMatrix lhs(nu, nu);
    if (k >= 1) lhs += ca.P[static_cast<size_t>(k - 1)];
    if (k < deg) lhs -= A * ca.P[static_cast<size_t>(k)];
    if (!(lhs == ca.chi.coeff(k) * QMatrix::identity(nu))) return false;
  }
  return true;
}

CMatrix FuchsianSystem::coefficient(cd t) const {
  CMatrix acc = CMatrix::Zero(dim(), dim());
  for (size_t j = 0; j < points.size(); ++j) acc += residues[j] / (t - points[j]);
  return acc;
}

FuchsianSystem to_fuchsian(const HyperGeomSystem& sys, double precision) {
  const CharAdjugate ca = char_adjugate(sys.A);
  if (gcd(ca.chi, ca.chi.derivative()).degree() > 0)
    throw Error(ErrorKind::RepeatedSpectrum, "det(tE - A) has a multiple root: " + ca.chi.to_string());
  const std::vector<cd> roots = polynomial_roots(ca.chi.to_complex());
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= kCriticalValueMergeTolerance * (1 + std::abs(roots[i])))
        throw Error(ErrorKind::RepeatedSpectrum, "det(tE - A) has numerically clustered roots");
  const UPoly dchi = ca.chi.derivative();
  const CMatrix B = to_complex(sys.B);
  FuchsianSystem F;
  F.points = roots;
  std::sort(F.points.begin(), F.points.end(), complex_less);
  for (cd tj : F.points) F.residues.push_back(ca.eval_P(tj) * B / dchi.eval(tj));

  // Compare the partial fractions with chi^{-1} P B away from the poles.
  double scale = 1;
  for (cd tj : F.points) scale = std::max(scale, std::abs(tj));
  const cd probes[] = {cd(0.31, 0.77), cd(-0.64, 0.45), cd(0.12, -0.93)};
  for (cd p : probes) {
    const cd t = 2.0 * scale * p + cd(0.5, 0.25);
    const CMatrix direct = ca.eval_P(t) * B / ca.chi.eval(t);
    const CMatrix fractions = F.coefficient(t);
    const double err = row_sum_norm(direct - fractions);
    if (!(err <= std::max(precision, 1e-9) * (1 + row_sum_norm(direct)) * 1e3))
      throw Error(ErrorKind::NumericalFailure, "partial-fraction reconstruction failed");
  }
  return F;
}

GeometryMetrics geometry_metrics(const FuchsianSystem& F) {
  GeometryMetrics g;
  for (const auto& r : F.residues) g.residual_norm = std::max(g.residual_norm, row_sum_norm(r));
  for (size_t i = 0; i < F.points.size(); ++i) {
    g.spread = std::max(g.spread, std::abs(F.points[i]));
    for (size_t j = 0; j < F.points.size(); ++j)
      if (i != j) g.spread = std::max(g.spread, 1.0 / std::abs(F.points[i] - F.points[j]));
  }
  return g;
}

// ---------------------------------------------------------------------------
// pf-v1

namespace {

using json = nlohmann::ordered_json;

json exact_matrix(const QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_exact_string());
    rows.push_back(row);
  }
  return rows;
}

json complex_pair(cd z) { return json::array({z.real(), z.imag()}); }

json complex_matrix(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json parse_document(std::string_view text, const char* kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed pf-v1 document: ") + e.what(), 1, static_cast<int>(e.byte));
  }
  if (!doc.is_object() || doc.value("format", "") != "pf-v1")
    throw ParseError("missing format tag pf-v1", 1, 1);
  if (doc.value("kind", "") != kind) throw ParseError(std::string("expected kind ") + kind, 1, 1);
  return doc;
}

QMatrix read_exact_matrix(const json& j, int nu, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != nu)
    throw ParseError(std::string("matrix ") + name + " has the wrong shape", 1, 1);
  QMatrix m(nu, nu);
  for (int i = 0; i < nu; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != nu)
      throw ParseError(std::string("matrix ") + name + " has the wrong shape", 1, 1);
    for (int k = 0; k < nu; ++k) {
      const json& e = row[static_cast<size_t>(k)];
      if (!e.is_string()) throw ParseError(std::string("matrix ") + name + " entries must be \"p/q\" strings", 1, 1);
      m(i, k) = parse_coefficient(e.get<std::string>());
    }
  }
  return m;
}

cd read_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex values must be [re, im] pairs", 1, 1);
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string serialize(const HyperGeomSystem& sys) {
  json doc;
  doc["format"] = "pf-v1";
  doc["kind"] = "hypergeometric";
  doc["hamiltonian"] = sys.hamiltonian.to_string();
  doc["n"] = sys.basis.n;
  doc["nu"] = sys.basis.nu;
  json basis = json::array();
  for (const auto& m : sys.basis.monomials) basis.push_back(BiPoly::monomial(m.r, m.s).to_string());
  doc["basis"] = basis;
  doc["A"] = exact_matrix(sys.A);
  doc["B"] = exact_matrix(sys.B);
  return doc.dump(2) + "\n";
}

std::string serialize(const FuchsianSystem& F) {
  json doc;
  doc["format"] = "pf-v1";
  doc["kind"] = "fuchsian";
  doc["dim"] = F.dim();
  json points = json::array();
  for (cd t : F.points) points.push_back(complex_pair(t));
  doc["points"] = points;
  json residues = json::array();
  for (const auto& r : F.residues) residues.push_back(complex_matrix(r));
  doc["residues"] = residues;
  return doc.dump(2) + "\n";
}

HyperGeomSystem parse_hypergeometric(std::string_view text) {
  const json doc = parse_document(text, "hypergeometric");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("missing integer field n", 1, 1);
  HyperGeomSystem sys;
  sys.basis = build_basis(doc["n"].get<int>());
  if (doc.contains("hamiltonian")) sys.hamiltonian = parse_bipoly(doc["hamiltonian"].get<std::string>());
  if (!doc.contains("A") || !doc.contains("B")) throw ParseError("missing matrices A and B", 1, 1);
  sys.A = read_exact_matrix(doc["A"], sys.basis.nu, "A");
  sys.B = read_exact_matrix(doc["B"], sys.basis.nu, "B");
  return sys;
}

FuchsianSystem parse_fuchsian(std::string_view text) {
  const json doc = parse_document(text, "fuchsian");
  if (!doc.contains("points") || !doc.contains("residues")) throw ParseError("missing points or residues", 1, 1);
  FuchsianSystem F;
  for (const auto& p : doc["points"]) F.points.push_back(read_complex(p));
  const json& res = doc["residues"];
  if (!res.is_array() || res.size() != F.points.size()) throw ParseError("one residue per point is required", 1, 1);
  for (const auto& r : res) {
    const auto dim = static_cast<Eigen::Index>(r.size());
    if (!F.residues.empty() && dim != F.residues.front().rows()) throw ParseError("residues differ in size", 1, 1);
    CMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const json& row = r[static_cast<size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) throw ParseError("residue is not square", 1, 1);
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = read_complex(row[static_cast<size_t>(j)]);
    }
    F.residues.push_back(m);
  }
  return F;
}

}  // namespace pflab
