#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace pflab {

using Rational = mpq_class;

/// Exact Gaussian rational re + i*im. All arithmetic is exact.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(const Rational& re) : re_(re) { re_.canonicalize(); }  // NOLINT
  Coefficient(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static Coefficient ratio(long num, long den) { return Coefficient(Rational(num, den)); }
  static Coefficient imaginary_unit() { return Coefficient(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  /// |re| + |im|: an exact upper bound for the modulus, zero iff the value is zero.
  Rational magnitude() const { return Rational(abs(re_) + abs(im_)); }

  Coefficient conj() const { return Coefficient(re_, Rational(-im_)); }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Coefficient operator-() const { return Coefficient(Rational(-re_), Rational(-im_)); }
  Coefficient& operator+=(const Coefficient& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  /// "p/q" for real values (denominator always shown), "(p/q+p'/q'i)" otherwise.
  std::string to_exact_string() const;
  /// Compact form used in polynomial printing: integers without "/1".
  std::string to_compact_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string rational_to_string(const Rational& q, bool always_show_denominator);

/// Parse "p", "p/q", "-p/q", "(p/q+p'/q'i)", "i", "3/4i". Throws ParseError.
Coefficient parse_coefficient(const std::string& text);

}  // namespace pflab
