#include "pflab/coefficient.hpp"

#include "pflab/errors.hpp"
#include "pflab/parse.hpp"

namespace pflab {

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero coefficient");
  Rational den = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  Rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const Rational& q, bool always_show_denominator) {
  if (!always_show_denominator && q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Coefficient::to_exact_string() const {
  if (is_real()) return rational_to_string(re_, true);
  std::string out = "(" + rational_to_string(re_, true);
  out += sgn(im_) < 0 ? "-" : "+";
  out += rational_to_string(Rational(abs(im_)), true) + "i)";
  return out;
}

std::string Coefficient::to_compact_string() const {
  if (is_real()) return rational_to_string(re_, false);
  std::string out = "(" + rational_to_string(re_, false);
  out += sgn(im_) < 0 ? "-" : "+";
  out += rational_to_string(Rational(abs(im_)), false) + "i)";
  return out;
}

Coefficient parse_coefficient(const std::string& text) {
  BiPoly p = parse_bipoly(text);
  if (p.is_zero()) return Coefficient(0);
  if (p.degree() != 0) throw ParseError("expected a constant coefficient", 1, 1);
  return p.coefficient(0, 0);
}

}  // namespace pflab
