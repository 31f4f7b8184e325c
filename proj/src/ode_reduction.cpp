#include "pflab/ode_reduction.hpp"

#include <algorithm>
#include <cmath>

#include "pflab/errors.hpp"

namespace pflab {

// ---------------------------------------------------------------------------
// LinearSystem

LinearSystem::LinearSystem(std::vector<QMatrix> coeff) : coeff_(std::move(coeff)) {
  if (coeff_.empty() || coeff_.front().rows() < 1 || coeff_.front().rows() != coeff_.front().cols())
    throw Error(ErrorKind::InvalidArgument, "linear system needs a square coefficient matrix");
  dim_ = coeff_.front().rows();
  for (const auto& m : coeff_)
    if (m.rows() != dim_ || m.cols() != dim_) throw Error(ErrorKind::InvalidArgument, "coefficient shapes differ");
  while (coeff_.size() > 1 && coeff_.back().is_zero()) coeff_.pop_back();
}

LinearSystem LinearSystem::from_entries(const std::vector<std::vector<UPoly>>& entries) {
  const int n = static_cast<int>(entries.size());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty system");
  int d = 0;
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidArgument, "system matrix must be square");
    for (const auto& e : row) d = std::max(d, static_cast<int>(e.degree()));
  }
  std::vector<QMatrix> coeff(static_cast<size_t>(d) + 1, QMatrix(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const UPoly& e = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k <= e.degree(); ++k) coeff[static_cast<size_t>(k)](i, j) = e.coeff(k);
    }
  return LinearSystem(std::move(coeff));
}

UPoly LinearSystem::entry(int i, int j) const {
  std::vector<Coefficient> c;
  for (const auto& m : coeff_) c.push_back(m(i, j));
  return UPoly(std::move(c));
}

CMatrix LinearSystem::eval(std::complex<double> t) const {
  CMatrix acc = CMatrix::Zero(dim_, dim_);
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * t + to_complex(*it);
  return acc;
}

// ---------------------------------------------------------------------------
// Covector iterations

namespace {

Degree covector_degree(const PolyCovector& q) {
  Degree d = kNegInfDegree;
  for (const auto& e : q) d = std::max(d, e.degree());
  return d;
}

PolyCovector next_iterate(const LinearSystem& sys, const PolyCovector& q) {
  const int n = sys.dim();
  PolyCovector out(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    UPoly acc = q[static_cast<size_t>(j)].derivative();
    for (int i = 0; i < n; ++i)
      if (!q[static_cast<size_t>(i)].is_zero()) acc += q[static_cast<size_t>(i)] * sys.entry(i, j);
    out[static_cast<size_t>(j)] = std::move(acc);
  }
  return out;
}

UPoly content(const std::vector<UPoly>& row) {
  UPoly g;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    g = g.is_zero() ? e.monic() : gcd(g, e);
    if (g.degree() == 0) break;
  }
  return g;
}

}  // namespace

CovectorIterates covector_iterates(const LinearSystem& sys, const PolyCovector& q0, int kmax) {
  if (static_cast<int>(q0.size()) != sys.dim()) throw Error(ErrorKind::InvalidArgument, "covector has the wrong size");
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be nonnegative");
  CovectorIterates out;
  out.q.push_back(q0);
  const Degree d0 = covector_degree(q0);
  const int growth = std::max(1, static_cast<int>(sys.degree()));
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) out.q.push_back(next_iterate(sys, out.q.back()));
    out.degrees.push_back(covector_degree(out.q.back()));
    out.degree_bounds.push_back(d0 == kNegInfDegree ? kNegInfDegree : d0 + k * growth);
  }
  return out;
}

int polynomial_matrix_rank(std::vector<std::vector<UPoly>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t pivot = rows.size();
    for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
      if (!rows[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
    const auto& prow = rows[static_cast<size_t>(rank)];
    for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const UPoly factor = rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] * prow[c] - factor * prow[j];
      const UPoly g = content(rows[r]);
      if (!g.is_zero() && g.degree() > 0)
        for (auto& e : rows[r]) e = exact_div(e, g);
    }
    ++rank;
  }
  return rank;
}

ScalarODE reduce_to_scalar(const LinearSystem& sys, const PolyCovector& q0) {
  if (std::all_of(q0.begin(), q0.end(), [](const UPoly& e) { return e.is_zero(); }))
    throw Error(ErrorKind::InvalidArgument, "q0 must be nonzero");
  const int n = sys.dim();
  const CovectorIterates it = covector_iterates(sys, q0, n);
  int order = n;
  for (int l = 1; l <= n; ++l) {
    std::vector<std::vector<UPoly>> rows(it.q.begin(), it.q.begin() + l + 1);
    if (polynomial_matrix_rank(rows) < l + 1) {
      order = l;
      break;
    }
  }
  // Solve sum_{i=1}^{l} a_i q_{l-i} = -q_l componentwise: n equations, l unknowns.
  std::vector<std::vector<RationalFunction>> m(static_cast<size_t>(n),
                                               std::vector<RationalFunction>(static_cast<size_t>(order) + 1));
  for (int row = 0; row < n; ++row) {
    for (int i = 1; i <= order; ++i)
      m[static_cast<size_t>(row)][static_cast<size_t>(i - 1)] =
          RationalFunction(it.q[static_cast<size_t>(order - i)][static_cast<size_t>(row)]);
    m[static_cast<size_t>(row)][static_cast<size_t>(order)] =
        -RationalFunction(it.q[static_cast<size_t>(order)][static_cast<size_t>(row)]);
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < order && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!m[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(p)]);
    const RationalFunction inv = RationalFunction(UPoly(1)) / m[static_cast<size_t>(r)][static_cast<size_t>(c)];
    for (auto& e : m[static_cast<size_t>(r)]) e = e * inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || m[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) continue;
      const RationalFunction f = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
      for (int j = c; j <= order; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] - f * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (static_cast<int>(pivot_col.size()) != order)
    throw Error(ErrorKind::InternalDegreeViolation, "iterates are not independent below the stabilization order");
  for (int i = r; i < n; ++i)
    if (!m[static_cast<size_t>(i)][static_cast<size_t>(order)].is_zero())
      throw Error(ErrorKind::InternalDegreeViolation, "linear dependence of iterates could not be solved");
  ScalarODE ode;
  ode.order = order;
  ode.coeffs.resize(static_cast<size_t>(order));
  for (int k = 0; k < order; ++k)
    ode.coeffs[static_cast<size_t>(pivot_col[static_cast<size_t>(k)])] = m[static_cast<size_t>(k)][static_cast<size_t>(order)];
  return ode;
}

std::string ScalarODE::to_string() const {
  std::string out = "y^(" + std::to_string(order) + ")";
  for (int i = 1; i <= order; ++i) {
    const RationalFunction& a = coeffs[static_cast<size_t>(i - 1)];
    if (a.is_zero()) continue;
    out += " + (" + a.to_string() + ")*y^(" + std::to_string(order - i) + ")";
  }
  return out + " = 0";
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(int nvars, const Coefficient& c) {
  MPoly p(nvars);
  p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  MPoly p(nvars);
  Exponents e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(index)] = 1;
  p.add_term(e, Coefficient(1));
  return p;
}

Degree MPoly::degree() const {
  Degree d = kNegInfDegree;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::add_term(const Exponents& e, const Coefficient& c) {
  if (static_cast<int>(e.size()) != nvars_) throw Error(ErrorKind::InvalidArgument, "exponent vector size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::diff(int index) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<size_t>(index)];
    if (k == 0) continue;
    Exponents f = e;
    --f[static_cast<size_t>(index)];
    out.add_term(f, c * Coefficient(k));
  }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
  MPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e = ea;
      for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mon;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += k == 0 ? "t" : "x" + std::to_string(k);
      if (e[k] > 1) mon += "^" + std::to_string(e[k]);
    }
    std::string coef = c.to_compact_string();
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    std::string term;
    if (mon.empty())
      term = coef;
    else if (coef == "1")
      term = mon;
    else
      term = coef + "*" + mon;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? "-" : "+") + term;
  }
  return out;
}

LieIterates lie_iterates(const std::vector<MPoly>& P, const MPoly& Q, int kmax) {
  const int nvars = Q.nvars();
  if (static_cast<int>(P.size()) != nvars - 1) throw Error(ErrorKind::InvalidArgument, "need one field component per x_i");
  for (const auto& p : P)
    if (p.nvars() != nvars) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be nonnegative");
  LieIterates out;
  out.q.push_back(Q);
  out.degrees.push_back(Q.degree());
  for (int k = 0; k < kmax; ++k) {
    const MPoly& q = out.q.back();
    MPoly next = q.diff(0);
    for (int i = 1; i < nvars; ++i) next += q.diff(i) * P[static_cast<size_t>(i - 1)];
    out.degrees.push_back(next.degree());
    out.q.push_back(std::move(next));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Recursive bounds

namespace {

class Guard {
 public:
  explicit Guard(const ResourceBudget& b) : budget_(b) {}
  void step(std::uint64_t count = 1) {
    if (steps_ + count > budget_.max_steps)
      throw Error(ErrorKind::ResourceExceeded, "recursion exceeds the step budget");
    steps_ += count;
  }
  void check(const mpz_class& v) const {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > budget_.max_bits)
      throw Error(ErrorKind::ResourceExceeded, "value exceeds the bit budget");
  }
  // Throws unless `count` further steps fit.
  void reserve(const mpz_class& count) const {
    if (count > mpz_class(std::to_string(budget_.max_steps - steps_)))
      throw Error(ErrorKind::ResourceExceeded, "recursion exceeds the step budget");
  }
  const ResourceBudget& budget() const { return budget_; }

 private:
  ResourceBudget budget_;
  std::uint64_t steps_ = 0;
};

mpz_class power_of_two(const mpz_class& e, const Guard& guard) {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  if (e >= mpz_class(std::to_string(guard.budget().max_bits)))
    throw Error(ErrorKind::ResourceExceeded, "value exceeds the bit budget");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e.get_ui());
  return out;
}

mpz_class power(const mpz_class& base, const mpz_class& e, const Guard& guard) {
  if (base == 0) return e == 0 ? 1 : 0;
  if (base == 1) return 1;
  // bits of base^e are about e * log2(base)
  const double bits = mpz_sizeinbase(base.get_mpz_t(), 2) - 1.0;
  if (e > mpz_class(std::to_string(guard.budget().max_bits)) ||
      e.get_d() * std::max(bits, 1.0) > static_cast<double>(guard.budget().max_bits))
    throw Error(ErrorKind::ResourceExceeded, "value exceeds the bit budget");
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e.get_ui());
  guard.check(out);
  return out;
}

mpz_class word_bound(long n, mpz_class d, mpz_class i, Guard& guard,
                     std::map<std::tuple<long, mpz_class, mpz_class>, mpz_class>& memo) {
  guard.step();
  if (n == 1) return i;
  auto key = std::make_tuple(n, d, i);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // f(n, d, i) = f(n-1, d, d) + f(n, d + f(n-1, d, d), i - 1), f(n, d, 0) = f(n-1, d, d)
  guard.reserve(i);
  mpz_class acc = 0;
  for (mpz_class k = i; k > 0; --k) {
    const mpz_class c = word_bound(n - 1, d, d, guard, memo);
    acc += c;
    d += c;
    guard.check(acc);
    guard.check(d);
  }
  acc += word_bound(n - 1, d, d, guard, memo);
  guard.check(acc);
  memo.emplace(key, acc);
  return acc;
}

}  // namespace

mpz_class chain_bound(ChainKind kind, long n, const mpz_class& d, std::optional<mpz_class> i, const ResourceBudget& budget) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "chain_bound needs n >= 1 and d >= 1");
  if ((kind == ChainKind::Word) != i.has_value())
    throw Error(ErrorKind::InvalidArgument, "the index i is required exactly for word chains");
  Guard guard(budget);
  switch (kind) {
    case ChainKind::Linear: {
      // g(1, d) = d, g(n, d) = d + g(n-1, 2d)
      mpz_class acc = 0, cur = d;
      for (long k = n; k >= 1; --k) {
        guard.step();
        acc += cur;
        guard.check(acc);
        if (k > 1) cur *= 2;
      }
      return acc;
    }
    case ChainKind::Exponential: {
      // g(1, d) = d, g(n, d) = d + g(n-1, d^d)
      mpz_class acc = 0, cur = d;
      for (long k = n; k >= 1; --k) {
        guard.step();
        acc += cur;
        guard.check(acc);
        if (k > 1) cur = power(cur, cur, guard);
      }
      return acc;
    }
    case ChainKind::Word: {
      if (*i < 0) throw Error(ErrorKind::InvalidArgument, "i must be nonnegative");
      std::map<std::tuple<long, mpz_class, mpz_class>, mpz_class> memo;
      return word_bound(n, d, *i, guard, memo);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown chain kind");
}

mpz_class ackermann(long z, const mpz_class& x, const mpz_class& y, const ResourceBudget& budget) {
  if (z < 0 || x < 0 || y < 0) throw Error(ErrorKind::InvalidArgument, "ackermann needs nonnegative arguments");
  Guard guard(budget);
  struct Eval {
    Guard& guard;
    const mpz_class& x;
    mpz_class operator()(long level, const mpz_class& yy) {
      guard.step();
      switch (level) {
        case 0: return yy + 1;
        case 1: return x + yy;
        case 2: {
          mpz_class r = x * yy;
          guard.check(r);
          return r;
        }
        default: {
          // A(z, x, y) = A(z-1, x, A(z, x, y-1)), A(z, x, 0) = 1 for z >= 3
          guard.reserve(yy);
          mpz_class v = 1;
          for (mpz_class k = yy; k > 0; --k) {
            v = (*this)(level - 1, v);
            guard.check(v);
          }
          return v;
        }
      }
    }
  };
  return Eval{guard, x}(z, y);
}

mpz_class tower(long n, const mpz_class& k, const ResourceBudget& budget) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidArgument, "tower needs nonnegative arguments");
  Guard guard(budget);
  mpz_class v = k;
  for (long m = 0; m < n; ++m) {
    guard.step();
    v = power_of_two(v, guard);
  }
  return v;
}

}  // namespace pflab
