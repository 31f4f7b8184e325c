#include "pflab/perturbation.hpp"

#include <map>

#include "pflab/errors.hpp"

namespace pflab {

namespace {

// Solution of dG ^ dH = target with deg G <= cap, or nullopt.
std::optional<BiPoly> solve_compensator(const Hamiltonian& H, const BiPoly& target, int cap) {
  const BiPoly& hx = H.dh().p();
  const BiPoly& hy = H.dh().q();
  std::vector<Monomial> unknowns;
  for (int d = 1; d <= cap; ++d)  // constants lie in the kernel
    for (int s = 0; s <= d; ++s) unknowns.push_back({d - s, s});
  if (unknowns.empty()) {
    if (target.is_zero()) return BiPoly();
    return std::nullopt;
  }
  // dG ^ dH = (G_x H_y - G_y H_x) dx^dy
  std::vector<BiPoly> images;
  std::map<Monomial, int, MonomialOrder> rows;
  for (const auto& m : unknowns) {
    const BiPoly g = BiPoly::monomial(m.r, m.s);
    images.push_back(g.diff_x() * hy - g.diff_y() * hx);
    for (const auto& [mon, c] : images.back().terms()) rows.emplace(mon, 0);
  }
  for (const auto& [mon, c] : target.terms()) rows.emplace(mon, 0);
  int next = 0;
  for (auto& [mon, idx] : rows) idx = next++;
  QMatrix m(next, static_cast<int>(unknowns.size()));
  for (size_t j = 0; j < images.size(); ++j)
    for (const auto& [mon, c] : images[j].terms()) m(rows.at(mon), static_cast<int>(j)) = c;
  std::vector<Coefficient> rhs(static_cast<size_t>(next), Coefficient(0));
  for (const auto& [mon, c] : target.terms()) rhs[static_cast<size_t>(rows.at(mon))] = c;
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) return std::nullopt;
  BiPoly G;
  for (size_t j = 0; j < unknowns.size(); ++j) G.add_term(unknowns[j].r, unknowns[j].s, (*sol)[j]);
  return G;
}

}  // namespace

CompensatorPair decompose_relative(const Hamiltonian& H, const KForm& omega, int deg_cap) {
  if (omega.rank() != 1) throw Error(ErrorKind::InvalidArgument, "decompose_relative expects a 1-form");
  if (!omega.is_zero() && deg_cap < omega.degree() - H.n())
    throw Error(ErrorKind::InvalidArgument, "degree cap must be at least deg omega - n");
  const BiPoly target = ext_d(omega).scalar();
  auto G = solve_compensator(H, target, deg_cap);
  if (!G) {
    const bool persistent = !solve_compensator(H, target, deg_cap + 2).has_value();
    throw NotDecomposableError(persistent ? "d(omega) is not in dH ^ d(polynomials) up to degree cap + 2"
                                          : "no compensator up to the degree cap; one exists at cap + 2",
                               deg_cap, persistent);
  }
  // omega - G dH is closed; integrate it.
  const BiPoly p = omega.p() - *G * H.dh().p();
  const BiPoly q = omega.q() - *G * H.dh().q();
  BiPoly F = p.integrate_x();
  F += (q - F.diff_y()).integrate_y();
  if (!(ext_d(KForm::function(F)) == KForm::one_form(p, q)))
    throw Error(ErrorKind::InternalDegreeViolation, "remainder of the compensator is not closed");
  return {std::move(*G), std::move(F)};
}

KForm second_variation_form(const KForm& omega, const CompensatorPair& pair) {
  if (omega.rank() != 1) throw Error(ErrorKind::InvalidArgument, "second_variation_form expects a 1-form");
  return pair.G * omega;
}

bool rotational_center_test(const Hamiltonian& H, const KForm& omega) {
  const BiPoly& h = H.h();
  const Coefficient c = h.coefficient(2, 0);
  if (c.is_zero() || !(h == BiPoly::monomial(2, 0, c) + BiPoly::monomial(0, 2, c)))
    throw Error(ErrorKind::UnsupportedHamiltonian, "rotational_center_test needs H = c (x^2 + y^2)");
  return rotational_center_test(omega);
}

bool rotational_center_test(const KForm& omega) {
  if (omega.rank() != 1) throw Error(ErrorKind::InvalidArgument, "rotational_center_test expects a 1-form");
  // x = (z + zbar)/2, y = (z - zbar)/(2i); z plays the role of x and zbar of y.
  const Coefficient half = Coefficient::ratio(1, 2);
  const Coefficient minus_half_i(Rational(0), Rational(-1, 2));
  const BiPoly xs = (BiPoly::x() + BiPoly::y()) * half;
  const BiPoly ys = (BiPoly::x() - BiPoly::y()) * minus_half_i;
  const BiPoly w = ext_d(omega).scalar().compose(xs, ys);
  for (const auto& [mon, c] : w.terms())
    if (mon.r == mon.s) return false;
  return true;
}

}  // namespace pflab
