#include "identities.hpp"

#include "polyring/qsym.hpp"
#include "polyring/transforms.hpp"

namespace polyring::cli {

using qsym::QSymFunction;
using ring::TPoly;

namespace {

TPoly map_op(const TPoly& t, FormalSum (*op)(const FormalSum&)) {
  TPoly r;
  for (auto& x : t) r.push_back(op(x));
  return r;
}

TPoly scaled(const TPoly& t, const Int& c) { return ring::tpoly_scale_shift(t, c, 0); }
TPoly shifted(const TPoly& t) { return ring::tpoly_scale_shift(t, 1, 1); }

// entries placed at given powers of t
TPoly at(Ambient a, std::initializer_list<std::pair<int, FormalSum>> parts) {
  TPoly r;
  for (auto& [k, x] : parts) {
    if (static_cast<int>(r.size()) <= k) r.resize(k + 1, FormalSum(a));
    r[k] += x;
  }
  return r;
}

// t xi_t(s) in P: c pt at t^{dim Q + 1} for every term c Q
TPoly t_xi_t(const FormalSum& s) {
  TPoly r;
  for (auto& [q, c] : s.terms()) {
    const int k = q.dim() + 1;
    if (static_cast<int>(r.size()) <= k) r.resize(k + 1, FormalSum(Ambient::P));
    r[k].add(polytope::point(), c);
  }
  return r;
}

Int eps0(const FormalSum& s) { return s.coeff(polytope::empty()); }

FormalSum bracket_BC(const FormalSum& s) {
  return ring::bipyramid_op(ring::cone_op(s)) - ring::cone_op(ring::bipyramid_op(s));
}

QSymFunction alpha() { return QSymFunction::alpha_power(1); }

}  // namespace

bool phi_unit(const Polytope& p, Ambient a) {
  FormalSum s(a, p);
  const int top = p.dim() + 2;
  std::vector<FormalSum> dj(top + 1, FormalSum(a));
  for (int j = 0; j <= top; ++j) dj[j] = j ? ring::d_k(s, j) : s;
  for (int k = 1; k <= top; ++k) {
    FormalSum total(a);
    for (int i = 0; i <= k; ++i) {
      FormalSum term = i ? ring::d_k(dj[k - i], i) : dj[k - i];
      if (i % 2)
        total -= term;
      else
        total += term;
    }
    if (!total.is_zero()) return false;
  }
  return true;
}

bool commutator_d_C(const FormalSum& s) {
  FormalSum lhs = ring::d_k(ring::cone_op(s), 1) - ring::cone_op(ring::d_k(s, 1));
  FormalSum rhs = s;
  if (s.ambient() == Ambient::P) rhs.add(polytope::point(), s.coeff(polytope::point()));
  return lhs == rhs;
}

bool phi_C(const FormalSum& s) {
  const Ambient a = s.ambient();
  TPoly ps = ring::phi(s);
  TPoly rhs = ring::tpoly_add(map_op(ps, ring::cone_op), shifted(ps));
  if (a == Ambient::P) rhs = ring::tpoly_add(rhs, t_xi_t(s));
  return ring::tpoly_equal(ring::phi(ring::cone_op(s)), rhs);
}

bool phi_B(const FormalSum& s) {
  const Ambient a = s.ambient();
  TPoly ps = ring::phi(s);
  FormalSum bs = ring::bipyramid_op(s), cs = ring::cone_op(s);
  TPoly rhs = at(a, {{0, bs - 2 * cs}, {1, -s}});
  rhs = ring::tpoly_add(rhs, scaled(map_op(ps, ring::cone_op), 2));
  rhs = ring::tpoly_add(rhs, shifted(ps));
  if (a == Ambient::P)
    rhs = ring::tpoly_add(rhs, scaled(t_xi_t(s), 2));
  else
    rhs = ring::tpoly_add(rhs, at(a, {{1, FormalSum(a, polytope::empty(), eps0(s))}}));
  return ring::tpoly_equal(ring::phi(bs), rhs);
}

bool phi_A(const FormalSum& s) {
  const Ambient a = s.ambient();
  if (a != Ambient::RP) throw DomainError("the A rule is stated in RP");
  TPoly ps = ring::phi(s);
  FormalSum as = ring::a_op(s);
  TPoly rhs = at(a, {{0, as}, {1, s - FormalSum(a, polytope::empty(), eps0(s))}});
  rhs = ring::tpoly_add(rhs, shifted(ps));
  return ring::tpoly_equal(ring::phi(as), rhs);
}

bool phi_BC(const FormalSum& s) {
  const Ambient a = s.ambient();
  FormalSum bc = bracket_BC(s);
  TPoly rhs;
  if (a == Ambient::P) {
    rhs = at(a, {{0, bc}, {1, ring::a_op(s)}, {2, s}});
  } else {
    const Int e = eps0(s);
    rhs = at(a, {{0, bc},
                 {1, ring::a_op(s) - FormalSum(a, polytope::point(), e)},
                 {2, s - FormalSum(a, polytope::empty(), e)}});
  }
  return ring::tpoly_equal(ring::phi(bc), rhs);
}

bool antipode_axiom(const Polytope& p) {
  FormalSum total(Ambient::RP);
  for (auto& [ab, c] : ring::coproduct_RP(p))
    total += c * ring::mul_join(FormalSum(Ambient::RP, ab.first), ring::antipode_RP(FormalSum(Ambient::RP, ab.second)));
  FormalSum expect(Ambient::RP);
  if (p.is_empty()) expect = ring::unit(Ambient::RP);
  return total == expect;
}

bool comodule_coassociative(const Polytope& p) {
  ring::Tensor3 left, right;
  for (auto& [fq, c] : ring::comodule_delta_RP(p)) {
    for (auto& [gh, d] : ring::comodule_delta_RP(fq.first)) left[{gh.first, gh.second, fq.second}] += c * d;
    for (auto& [gh, d] : ring::coproduct_RP(fq.second)) right[{fq.first, gh.first, gh.second}] += c * d;
  }
  std::erase_if(left, [](auto& t) { return t.second == 0; });
  std::erase_if(right, [](auto& t) { return t.second == 0; });
  return left == right;
}

bool comodule_counit(const Polytope& p) {
  ring::Tensor2 kept;
  for (auto& [fq, c] : ring::comodule_delta_RP(p))
    if (fq.second.is_empty()) kept[fq] += c;
  return kept.size() == 1 && kept.begin()->first.first == p && kept.begin()->second == 1;
}

bool comodule_multiplicative(const Polytope& p, const Polytope& q) {
  ring::Tensor2 lhs = ring::comodule_delta_RP(polytope::product(p, q)), rhs;
  for (auto& [a, c] : ring::comodule_delta_RP(p))
    for (auto& [b, d] : ring::comodule_delta_RP(q))
      rhs[{polytope::product(a.first, b.first), polytope::join(a.second, b.second)}] += c * d;
  std::erase_if(rhs, [](auto& t) { return t.second == 0; });
  return lhs == rhs;
}

bool comodule_interrelation(const Polytope& p) {
  std::map<Polytope, QSymFunction> lhs, rhs;
  for (auto& [fq, c] : ring::comodule_delta_RP(p))
    lhs[fq.first] += c * transforms::ehrenborg_F(FormalSum(Ambient::RP, fq.second));
  for (auto& [w, d] : ring::coaction_R(FormalSum(Ambient::P, p)))
    for (auto& [q, c] : d.terms()) rhs[q] += QSymFunction::monomial(w, c);
  std::erase_if(lhs, [](auto& t) { return t.second.is_zero(); });
  std::erase_if(rhs, [](auto& t) { return t.second.is_zero(); });
  return lhs == rhs;
}

bool F_star_of_l_alpha(const Polytope& p) {
  QSymFunction total;
  for (auto& [k, s] : ring::l_alpha(p)) total += QSymFunction::alpha_power(k) * transforms::F_star(s);
  return total == transforms::f_poly(FormalSum(Ambient::P, p));
}

bool frp_identity(const Polytope& p) {
  FormalSum s(Ambient::RP, p);
  QSymFunction rhs = transforms::F_star(s);
  if (!p.is_empty()) rhs += alpha() * transforms::f_poly(s);
  return transforms::f_RP(s) == rhs && transforms::f_RP(p.flag()) == rhs;
}

bool frp_multiplicative(const Polytope& p, const Polytope& q) {
  return transforms::f_RP(FormalSum(Ambient::RP, polytope::join(p, q))) ==
         transforms::f_RP(FormalSum(Ambient::RP, p)) * transforms::f_RP(FormalSum(Ambient::RP, q));
}

bool join_formula(const Polytope& p, const Polytope& q) {
  FormalSum sp(Ambient::P, p), sq(Ambient::P, q);
  QSymFunction fp = transforms::f_poly(sp), fq = transforms::f_poly(sq);
  QSymFunction rhs = fp * transforms::F_star(sq) + transforms::F_star(sp) * fq + alpha() * fp * fq;
  return transforms::f_poly(FormalSum(Ambient::P, polytope::join(p, q))) == rhs;
}

bool cone_formula(const Polytope& p) {
  FormalSum s(Ambient::P, p);
  QSymFunction rhs = transforms::F_star(s) + (alpha() + qsym::sigma(1)) * transforms::f_poly(s);
  return transforms::f_poly(FormalSum(Ambient::P, polytope::cone(p))) == rhs;
}

bool qsym_operators_P(const Polytope& p) {
  using namespace transforms;
  FormalSum s(Ambient::P, p);
  QSymFunction f = f_poly(s);
  return f_poly(ring::cone_op(s)) == C_qsym(f) && f_poly(ring::bipyramid_op(s)) == B_qsym(f) &&
         f_poly(ring::a_op(s)) == A_qsym(f);
}

bool qsym_operators_RP(const Polytope& p) {
  using namespace transforms;
  FormalSum s(Ambient::RP, p);
  QSymFunction g = f_RP(s), h = F_star(s);
  return f_RP(ring::cone_op(s)) == C_RP_qsym(g) && f_RP(ring::bipyramid_op(s)) == B_RP_qsym(g) &&
         f_RP(ring::a_op(s)) == A_RP_qsym(g) && F_star(ring::cone_op(s)) == C0_qsym(h) &&
         F_star(ring::bipyramid_op(s)) == B0_qsym(h) && F_star(ring::a_op(s)) == A0_qsym(h);
}

}  // namespace polyring::cli
