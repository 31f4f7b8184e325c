#pragma once

#include <complex>
#include <limits>
#include <map>
#include <string>

#include "pflab/coefficient.hpp"

namespace pflab {

/// Degrees are plain ints; the zero polynomial (and zero form) has degree kNegInfDegree.
using Degree = int;
inline constexpr Degree kNegInfDegree = std::numeric_limits<int>::min();

inline Degree degree_add(Degree a, Degree b) {
  if (a == kNegInfDegree || b == kNegInfDegree) return kNegInfDegree;
  return a + b;
}

struct Monomial {
  int r = 0;  // power of x
  int s = 0;  // power of y
  int degree() const { return r + s; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: lower total degree first, ties broken by higher x-power first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.r > b.r;
  }
};

/// Sparse bivariate polynomial in x, y with Gaussian-rational coefficients.
/// Canonical: no stored zero coefficients.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Coefficient, MonomialOrder>;

  BiPoly() = default;
  BiPoly(const Coefficient& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Coefficient(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }
  static BiPoly monomial(int r, int s, const Coefficient& c = Coefficient(1));

  const TermMap& terms() const { return terms_; }
  Coefficient coefficient(int r, int s) const;
  void add_term(int r, int s, const Coefficient& c);

  bool is_zero() const { return terms_.empty(); }
  Degree degree() const;
  /// The homogeneous component of exactly degree d.
  BiPoly homogeneous_part(int d) const;

  BiPoly diff_x() const;
  BiPoly diff_y() const;
  /// Antiderivative in x vanishing on x = 0.
  BiPoly integrate_x() const;
  /// Antiderivative in y vanishing on y = 0.
  BiPoly integrate_y() const;

  /// Sum of coefficient magnitudes.
  Rational norm() const;

  std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;
  Coefficient eval_exact(const Coefficient& x, const Coefficient& y) const;
  /// Substitute polynomials for x and y.
  BiPoly compose(const BiPoly& x_sub, const BiPoly& y_sub) const;
  BiPoly pow(int k) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Coefficient& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Coefficient& c) { return a *= c; }
  friend BiPoly operator*(const Coefficient& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Canonical text in the grammar accepted by parse_bipoly.
  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace pflab
