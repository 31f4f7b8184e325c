#pragma once

#include <string>

#include "pflab/bipoly.hpp"

namespace pflab {

/// Polynomial differential form on the plane of rank 0, 1 or 2.
///   rank 0: f
///   rank 1: p dx + q dy
///   rank 2: w dx^dy
/// The degree of a form is the maximal degree of its coefficients plus its rank.
class KForm {
 public:
  KForm() = default;  // zero function

  static KForm function(BiPoly f);
  static KForm one_form(BiPoly p, BiPoly q);
  static KForm two_form(BiPoly w);
  static KForm zero(int rank);

  int rank() const { return rank_; }
  /// rank 0: the function; rank 2: the dx^dy coefficient.
  const BiPoly& scalar() const { return a_; }
  /// dx coefficient of a 1-form.
  const BiPoly& p() const { return a_; }
  /// dy coefficient of a 1-form.
  const BiPoly& q() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  Degree degree() const;
  Rational norm() const { return a_.norm() + b_.norm(); }

  KForm operator-() const;
  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  /// Multiplication by a function (0-form).
  friend KForm operator*(const BiPoly& f, const KForm& a);
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.rank_ == b.rank_ && a.a_ == b.a_ && a.b_ == b.b_;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int rank_ = 0;
  BiPoly a_;
  BiPoly b_;
};

/// Exterior product. Throws RankOverflow when rank(a) + rank(b) > 2.
KForm wedge(const KForm& a, const KForm& b);
/// Exterior derivative. Throws RankOverflow on 2-forms.
KForm ext_d(const KForm& a);

}  // namespace pflab
