#include "pflab/kform.hpp"

#include <algorithm>

#include "pflab/errors.hpp"

namespace pflab {

KForm KForm::function(BiPoly f) {
  KForm out;
  out.rank_ = 0;
  out.a_ = std::move(f);
  return out;
}

KForm KForm::one_form(BiPoly p, BiPoly q) {
  KForm out;
  out.rank_ = 1;
  out.a_ = std::move(p);
  out.b_ = std::move(q);
  return out;
}

KForm KForm::two_form(BiPoly w) {
  KForm out;
  out.rank_ = 2;
  out.a_ = std::move(w);
  return out;
}

KForm KForm::zero(int rank) {
  if (rank < 0 || rank > 2) throw Error(ErrorKind::RankOverflow, "form rank must be 0, 1 or 2");
  KForm out;
  out.rank_ = rank;
  return out;
}

Degree KForm::degree() const {
  Degree d = std::max(a_.degree(), b_.degree());
  return degree_add(d, rank_);
}

KForm KForm::operator-() const {
  KForm out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

namespace {
void require_same_rank(const KForm& a, const KForm& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorKind::InvalidArgument, "cannot add forms of different rank");
}
}  // namespace

KForm& KForm::operator+=(const KForm& o) {
  require_same_rank(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  require_same_rank(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

KForm operator*(const BiPoly& f, const KForm& a) {
  KForm out = a;
  out.a_ = f * a.a_;
  out.b_ = f * a.b_;
  return out;
}

std::string KForm::to_string() const {
  switch (rank_) {
    case 0: return a_.to_string();
    case 1: return "(" + a_.to_string() + ")*dx + (" + b_.to_string() + ")*dy";
    default: return "(" + a_.to_string() + ")*dx^dy";
  }
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.rank() + b.rank() > 2) throw Error(ErrorKind::RankOverflow, "wedge rank sum exceeds 2");
  if (a.rank() == 0) return a.scalar() * b;
  if (b.rank() == 0) return b.scalar() * a;
  // (p dx + q dy) ^ (u dx + v dy) = (p v - q u) dx^dy
  return KForm::two_form(a.p() * b.q() - a.q() * b.p());
}

KForm ext_d(const KForm& a) {
  switch (a.rank()) {
    case 0: return KForm::one_form(a.scalar().diff_x(), a.scalar().diff_y());
    case 1: return KForm::two_form(a.q().diff_x() - a.p().diff_y());
    default: throw Error(ErrorKind::RankOverflow, "exterior derivative of a 2-form");
  }
}

}  // namespace pflab
