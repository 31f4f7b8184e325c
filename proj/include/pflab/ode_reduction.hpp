#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pflab/cmatrix.hpp"
#include "pflab/upoly.hpp"

namespace pflab {

/// Row vector of polynomials in t.
using PolyCovector = std::vector<UPoly>;

/// x' = A(t) x with A(t) = sum_k A_k t^k.
class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(std::vector<QMatrix> coeff);
  static LinearSystem constant(QMatrix A) { return LinearSystem(std::vector<QMatrix>{std::move(A)}); }
  /// Entry (i, j) of A(t) given as polynomials.
  static LinearSystem from_entries(const std::vector<std::vector<UPoly>>& entries);

  int dim() const { return dim_; }
  Degree degree() const { return static_cast<int>(coeff_.size()) - 1; }
  const std::vector<QMatrix>& coeff() const { return coeff_; }
  UPoly entry(int i, int j) const;
  CMatrix eval(std::complex<double> t) const;

 private:
  int dim_ = 0;
  std::vector<QMatrix> coeff_;
};

struct CovectorIterates {
  std::vector<PolyCovector> q;
  /// deg_t q_k for each k, and the a priori bound deg q_0 + k max(1, d).
  std::vector<Degree> degrees;
  std::vector<Degree> degree_bounds;
};

/// q_{k+1} = q_k' + q_k A(t), k < kmax.
CovectorIterates covector_iterates(const LinearSystem& sys, const PolyCovector& q0, int kmax);

/// y^(l) + sum_{i=1}^{l} a_i(t) y^(l-i) = 0
struct ScalarODE {
  int order = 0;
  std::vector<RationalFunction> coeffs;  // a_1 .. a_l

  std::string to_string() const;
};

/// Monic scalar equation for y = q0 . x; order is the first l at which q_l depends
/// linearly (over rational functions) on q_0 .. q_{l-1}.
ScalarODE reduce_to_scalar(const LinearSystem& sys, const PolyCovector& q0);

/// Rank over the field of rational functions of a polynomial matrix (rows x cols), by
/// fraction-free elimination with content removal.
int polynomial_matrix_rank(std::vector<std::vector<UPoly>> rows);

/// Sparse polynomial in (t, x_1, .., x_n); exponent vector index 0 is t.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Coefficient& c);
  /// Variable 0 is t, variable k >= 1 is x_k.
  static MPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Degree degree() const;
  MPoly diff(int index) const;
  void add_term(const Exponents& e, const Coefficient& c);

  MPoly& operator+=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  int nvars_ = 1;
  std::map<Exponents, Coefficient> terms_;
};

struct LieIterates {
  std::vector<MPoly> q;
  std::vector<Degree> degrees;
};

/// q_{k+1} = dq_k/dt + sum_i dq_k/dx_i P_i
LieIterates lie_iterates(const std::vector<MPoly>& P, const MPoly& Q, int kmax);

struct ResourceBudget {
  std::uint64_t max_bits = std::uint64_t{1} << 24;
  std::uint64_t max_steps = 1'000'000;
};

enum class ChainKind { Linear, Exponential, Word };

/// Recursive chain-length bounds; throws ResourceExceeded beyond the budget.
mpz_class chain_bound(ChainKind kind, long n, const mpz_class& d, std::optional<mpz_class> i = std::nullopt,
                      const ResourceBudget& budget = {});

mpz_class ackermann(long z, const mpz_class& x, const mpz_class& y, const ResourceBudget& budget = {});
/// tau(0, k) = k, tau(n + 1, k) = 2^tau(n, k)
mpz_class tower(long n, const mpz_class& k, const ResourceBudget& budget = {});

}  // namespace pflab
