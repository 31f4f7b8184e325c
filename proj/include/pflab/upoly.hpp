#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "pflab/bipoly.hpp"
#include "pflab/coefficient.hpp"

namespace pflab {

/// Dense univariate polynomial in t over the Gaussian rationals,
/// coefficients stored from the constant term upward, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Coefficient& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Coefficient(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Coefficient> coeffs);

  static UPoly t() { return monomial(1); }
  static UPoly monomial(int k, const Coefficient& c = Coefficient(1));

  const std::vector<Coefficient>& coeffs() const { return c_; }
  Coefficient coeff(int k) const;
  Degree degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Coefficient& leading() const { return c_.back(); }

  UPoly derivative() const;
  UPoly monic() const;
  Coefficient eval(const Coefficient& t) const;
  std::complex<double> eval(std::complex<double> t) const;
  std::vector<std::complex<double>> to_complex() const;
  Rational norm() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Text in the variable `var`, e.g. "t^2-3/2*t+1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Coefficient> c_;
};

/// Quotient and remainder of a by b (b != 0).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact division; throws InvalidArgument if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Square-free decomposition a = c * prod_k f_k^k; returns (f_k, k) with f_k monic,
/// nonconstant, pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a);

/// Rational function num/den, normalized: gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(UPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::complex<double> eval(std::complex<double> t) const { return num_.eval(t) / den_.eval(t); }
  RationalFunction derivative() const;

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  UPoly num_;
  UPoly den_;
};

}  // namespace pflab
