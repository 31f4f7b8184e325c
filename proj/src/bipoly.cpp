#include "pflab/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace pflab {

BiPoly::BiPoly(const Coefficient& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(int r, int s, const Coefficient& c) {
  BiPoly p;
  p.add_term(r, s, c);
  return p;
}

Coefficient BiPoly::coefficient(int r, int s) const {
  auto it = terms_.find(Monomial{r, s});
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void BiPoly::add_term(int r, int s, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{r, s}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Degree BiPoly::degree() const {
  if (terms_.empty()) return kNegInfDegree;
  return terms_.rbegin()->first.degree();
}

BiPoly BiPoly::homogeneous_part(int d) const {
  BiPoly out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

BiPoly BiPoly::diff_x() const {
  BiPoly out;
  for (const auto& [m, c] : terms_)
    if (m.r > 0) out.add_term(m.r - 1, m.s, c * Coefficient(m.r));
  return out;
}

BiPoly BiPoly::diff_y() const {
  BiPoly out;
  for (const auto& [m, c] : terms_)
    if (m.s > 0) out.add_term(m.r, m.s - 1, c * Coefficient(m.s));
  return out;
}

BiPoly BiPoly::integrate_x() const {
  BiPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.r + 1, m.s, c / Coefficient(m.r + 1));
  return out;
}

BiPoly BiPoly::integrate_y() const {
  BiPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.r, m.s + 1, c / Coefficient(m.s + 1));
  return out;
}

Rational BiPoly::norm() const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) sum += c.magnitude();
  return sum;
}

std::complex<double> BiPoly::eval(std::complex<double> x, std::complex<double> y) const {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) sum += c.to_complex() * std::pow(x, m.r) * std::pow(y, m.s);
  return sum;
}

namespace {
Coefficient power(const Coefficient& base, int k) {
  Coefficient out(1);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}
}  // namespace

Coefficient BiPoly::eval_exact(const Coefficient& x, const Coefficient& y) const {
  Coefficient sum(0);
  for (const auto& [m, c] : terms_) sum += c * power(x, m.r) * power(y, m.s);
  return sum;
}

BiPoly BiPoly::pow(int k) const {
  BiPoly out(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

BiPoly BiPoly::compose(const BiPoly& x_sub, const BiPoly& y_sub) const {
  int max_r = 0, max_s = 0;
  for (const auto& [m, c] : terms_) {
    max_r = std::max(max_r, m.r);
    max_s = std::max(max_s, m.s);
  }
  std::vector<BiPoly> xp{BiPoly(1)}, yp{BiPoly(1)};
  for (int i = 0; i < max_r; ++i) xp.push_back(xp.back() * x_sub);
  for (int i = 0; i < max_s; ++i) yp.push_back(yp.back() * y_sub);
  BiPoly out;
  for (const auto& [m, c] : terms_) out += (xp[m.r] * yp[m.s]) * c;
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.r, m.s, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.r, m.s, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.r + mb.r, ma.s + mb.s, ca * cb);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool is_const = m.r == 0 && m.s == 0;
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Rational mag = abs(c.re());
      if (!(mag == 1) || is_const) coeff = rational_to_string(mag, false);
    } else {
      coeff = c.to_compact_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    std::string body = coeff;
    auto append = [&body](const std::string& factor) {
      if (!body.empty()) body += "*";
      body += factor;
    };
    if (m.r > 0) append(m.r == 1 ? "x" : "x^" + std::to_string(m.r));
    if (m.s > 0) append(m.s == 1 ? "y" : "y^" + std::to_string(m.s));
    out += body;
  }
  return out;
}

}  // namespace pflab
