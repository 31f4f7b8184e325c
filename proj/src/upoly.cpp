#include "pflab/upoly.hpp"

#include <algorithm>

#include "pflab/errors.hpp"

namespace pflab {

UPoly::UPoly(const Coefficient& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Coefficient> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int k, const Coefficient& c) {
  if (c.is_zero()) return UPoly();
  std::vector<Coefficient> v(static_cast<size_t>(k) + 1, Coefficient(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Coefficient UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Coefficient(0);
  return c_[static_cast<size_t>(k)];
}

UPoly UPoly::derivative() const {
  std::vector<Coefficient> v;
  for (size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * Coefficient(static_cast<long>(k)));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly out = *this;
  Coefficient lc = leading();
  for (auto& c : out.c_) c /= lc;
  return out;
}

Coefficient UPoly::eval(const Coefficient& t) const {
  Coefficient acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<double> UPoly::eval(std::complex<double> t) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_complex();
  return acc;
}

std::vector<std::complex<double>> UPoly::to_complex() const {
  std::vector<std::complex<double>> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.to_complex());
  return v;
}

Rational UPoly::norm() const {
  Rational s = 0;
  for (const auto& c : c_) s += c.magnitude();
  return s;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coefficient(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coefficient(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Coefficient> v(a.c_.size() + b.c_.size() - 1, Coefficient(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  // Reuse the bivariate printer by mapping t -> x, then rename.
  BiPoly p;
  for (size_t k = 0; k < c_.size(); ++k) p.add_term(static_cast<int>(k), 0, c_[k]);
  std::string s = p.to_string();
  std::string out;
  for (char ch : s) {
    if (ch == 'x')
      out += var;
    else
      out += ch;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Coefficient> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Coefficient> quo(static_cast<size_t>(da - db) + 1, Coefficient(0));
  const Coefficient& lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const Coefficient& top = rem[static_cast<size_t>(k + db)];
    if (top.is_zero()) continue;
    Coefficient q = top / lb;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
    quo[static_cast<size_t>(k)] = q;
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a) {
  // Yun's algorithm.
  std::vector<std::pair<UPoly, int>> out;
  if (a.degree() < 1) return out;
  UPoly f = a.monic();
  UPoly fp = f.derivative();
  UPoly g = gcd(f, fp);
  UPoly c = exact_div(f, g);
  UPoly d = exact_div(fp, g) - c.derivative();
  int k = 1;
  while (c.degree() > 0) {
    UPoly h = gcd(c, d);
    if (h.degree() > 0) out.emplace_back(h, k);
    UPoly c2 = exact_div(c, h);
    d = exact_div(d, h) - c2.derivative();
    c = std::move(c2);
    ++k;
  }
  return out;
}

RationalFunction::RationalFunction(UPoly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  UPoly g = gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  Coefficient lc = den.leading();
  UPoly inv(Coefficient(1) / lc);
  num_ = num * inv;
  den_ = den * inv;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace pflab
