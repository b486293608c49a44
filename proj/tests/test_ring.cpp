#include <gtest/gtest.h>

#include "polyring/ring.hpp"

using namespace polyring;
using namespace polyring::ring;
using polytope::cone;
using polytope::cube;
using polytope::empty;
using polytope::point;
using polytope::simplex;

namespace {

FormalSum P(const Polytope& p, long c = 1) { return FormalSum(Ambient::P, p, c); }
FormalSum RP(const Polytope& p, long c = 1) { return FormalSum(Ambient::RP, p, c); }

std::vector<Polytope> small() {
  return {point(), cube(1), simplex(2), cube(2), polytope::polygon(5), simplex(3), cube(3), polytope::cross(3),
          cone(cube(2)), polytope::bipyramid(simplex(2))};
}

// d_k by listing faces directly.
FormalSum d_k_naive(const Polytope& p, int k, Ambient a) {
  FormalSum r(a);
  const int dim = p.dim() - k;
  if (dim < 0) {
    if (dim == -1 && a == Ambient::RP) r.add(empty(), 1);
    return r;
  }
  for (auto& [x, f] : polytope::faces(p, dim)) r.add(f, 1);
  return r;
}

}  // namespace

TEST(FormalSum, Arithmetic) {
  FormalSum s = 2 * RP(simplex(2)) - RP(cube(2));
  EXPECT_EQ(s.coeff(simplex(2)), 2);
  EXPECT_EQ(s.coeff(cube(2)), -1);
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(s.max_dim(), 2);
  EXPECT_TRUE(s.is_homogeneous());
  EXPECT_FALSE((s + RP(point())).is_homogeneous());
  EXPECT_EQ((s + RP(point())).graded(0), RP(point()));
  EXPECT_THROW(FormalSum(Ambient::P, empty()), DomainError);
  EXPECT_THROW(RP(empty()).in(Ambient::P), DomainError);
}

TEST(Multiplication, Examples) {
  auto s = 2 * P(point()) - P(cube(1));
  EXPECT_EQ(mul_product(P(point()), s), s);
  EXPECT_EQ(mul_join(RP(empty()), s.in(Ambient::RP)), s.in(Ambient::RP));
  EXPECT_EQ(mul_join(RP(simplex(0)), RP(simplex(0))), RP(simplex(1)));
  auto t = 2 * RP(point()) - RP(cube(1));
  EXPECT_EQ(mul_join(RP(simplex(0)), t), 2 * RP(simplex(1)) - RP(simplex(2)));
  EXPECT_THROW(mul_product(RP(empty()), RP(point())), DomainError);
  EXPECT_EQ(unit(Ambient::P), P(point()));
  EXPECT_EQ(unit(Ambient::RP), RP(empty()));
}

TEST(FaceOperators, Examples) {
  EXPECT_EQ(d_k(P(simplex(2)), 1), 3 * P(cube(1)));
  EXPECT_EQ(d_k(P(cone(point())), 1), 2 * P(point()));
  EXPECT_EQ(d_k(RP(cone(point())), 1), 2 * RP(point()));
  EXPECT_EQ(d_k(RP(polytope::cell24()), 1), 24 * RP(polytope::bipyramid(cube(2))));
  EXPECT_EQ(d_k(RP(polytope::cell24()), 5), RP(empty()));
  EXPECT_TRUE(d_k(P(polytope::cell24()), 5).is_zero());
  EXPECT_THROW(d_k(P(cube(1)), 0), DomainError);
}

TEST(FaceOperators, MatchFaceListing) {
  for (auto& p : small())
    for (int k = 1; k <= p.dim() + 2; ++k)
      for (Ambient a : {Ambient::P, Ambient::RP}) EXPECT_EQ(d_k(p, k, a), d_k_naive(p, k, a));
}

TEST(Phi, Examples) {
  auto ph = phi(RP(point()));
  ASSERT_GE(ph.size(), 2u);
  EXPECT_EQ(ph[0], RP(point()));
  EXPECT_EQ(ph[1], RP(empty()));
  auto pd = phi(P(simplex(2)));
  EXPECT_EQ(pd[0], P(simplex(2)));
  EXPECT_EQ(pd[1], 3 * P(cube(1)));
  EXPECT_EQ(pd[2], 3 * P(point()));
  for (std::size_t k = 3; k < pd.size(); ++k) EXPECT_TRUE(pd[k].is_zero());
  auto pe = phi(RP(empty()));
  EXPECT_EQ(pe[0], RP(empty()));
  for (std::size_t k = 1; k < pe.size(); ++k) EXPECT_TRUE(pe[k].is_zero());
}

TEST(ApplyOperator, Examples) {
  auto bd2 = P(polytope::bipyramid(simplex(2)));
  EXPECT_EQ(xi_alpha(apply_operator({2, 1}, bd2)).coeff(0), 18);
  EXPECT_EQ(xi_alpha(apply_operator({3}, bd2)).coeff(0), 5);
  for (auto& p : small())
    for (Ambient a : {Ambient::P, Ambient::RP})
      EXPECT_EQ(apply_operator({1, 1}, FormalSum(a, p)), 2 * d_k(FormalSum(a, p), 2));
}

// Both orders count the same nested pairs: a rank 3 interval has as many atoms as coatoms.
TEST(ApplyOperator, Commuting) {
  for (auto& p : small()) {
    auto s = P(p);
    EXPECT_EQ(apply_operator({2, 1}, s), apply_operator({1, 2}, s));
  }
}

TEST(Characters, Examples) {
  auto x = xi_alpha(P(simplex(2)) + 2 * P(cube(1)));
  EXPECT_EQ(x.coeff(2), 1);
  EXPECT_EQ(x.coeff(1), 2);
  EXPECT_EQ(epsilon_alpha(RP(empty())).coeff(0), 1);
  EXPECT_EQ(epsilon_alpha(RP(cube(2))).coeff(3), 1);
  EXPECT_THROW(xi_alpha(RP(empty())), DomainError);
}

// xi_{-alpha} Phi(alpha) = xi_alpha on P; eps_{-alpha} Phi(alpha) = eps_0 on RP.
TEST(Characters, EulerForm) {
  for (auto& p : small()) {
    const int n = p.dim();
    auto ph = phi(P(p));
    AlphaPoly lhs;
    for (std::size_t k = 0; k < ph.size(); ++k)
      for (auto& [q, c] : ph[k].terms()) lhs.add(q.dim() + static_cast<int>(k), (q.dim() % 2 ? -c : c));
    EXPECT_EQ(lhs, AlphaPoly::monomial(n));
    auto pr = phi(RP(p));
    AlphaPoly l2;
    for (std::size_t k = 0; k < pr.size(); ++k)
      for (auto& [q, c] : pr[k].terms()) l2.add(q.dim() + 1 + static_cast<int>(k), ((q.dim() + 1) % 2 ? -c : c));
    EXPECT_TRUE(l2.is_zero());
  }
}

TEST(Operators, Examples) {
  EXPECT_EQ(a_op(P(cube(1))), 2 * P(simplex(2)) - P(cube(2)));
  EXPECT_EQ(cone_op(RP(empty())), RP(point()));
  EXPECT_EQ(bipyramid_op(RP(empty())), RP(point()));
  auto s = RP(simplex(2));
  EXPECT_EQ(d_k(cone_op(s), 1) - cone_op(d_k(s, 1)), s);
  auto t = P(simplex(2));
  EXPECT_EQ(d_k(cone_op(t), 1) - cone_op(d_k(t, 1)), t);
  EXPECT_EQ(d_k(cone_op(P(point())), 1) - cone_op(d_k(P(point()), 1)), 2 * P(point()));
}

TEST(Derivations, Examples) {
  auto q = RP(polytope::cell24());
  EXPECT_EQ(delta_derivation(q), 24 * RP(cube(3)));
  auto both = d_k(q, 1) + delta_derivation(q);
  EXPECT_EQ(dual_op(both), both);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(delta_derivation(RP(simplex(n))), (n + 1) * RP(simplex(n - 1)));
}

// d and delta are derivations of the join ring.
TEST(Derivations, Leibniz) {
  auto ps = small();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      auto a = RP(ps[i]), b = RP(ps[j]);
      EXPECT_EQ(d_k(mul_join(a, b), 1), mul_join(d_k(a, 1), b) + mul_join(a, d_k(b, 1)));
      EXPECT_EQ(delta_derivation(mul_join(a, b)), mul_join(delta_derivation(a), b) + mul_join(a, delta_derivation(b)));
    }
}

TEST(MilnorModule, ProductAndJoin) {
  auto ps = small();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      auto a = P(ps[i]), b = P(ps[j]);
      auto ra = RP(ps[i]), rb = RP(ps[j]);
      for (int k = 1; k <= 3; ++k) {
        FormalSum prod(Ambient::P), jn(Ambient::RP);
        for (int l = 0; l <= k; ++l) {
          prod += mul_product(l ? d_k(a, l) : a, k - l ? d_k(b, k - l) : b);
          jn += mul_join(l ? d_k(ra, l) : ra, k - l ? d_k(rb, k - l) : rb);
        }
        EXPECT_EQ(d_k(mul_product(a, b), k), prod);
        EXPECT_EQ(d_k(mul_join(ra, rb), k), jn);
      }
    }
}

TEST(Antipode, Examples) {
  EXPECT_EQ(antipode_RP(RP(point())), -RP(point()));
  EXPECT_EQ(antipode_RP(RP(cube(1))), RP(cube(1)));
  EXPECT_EQ(antipode_RP(RP(empty())), RP(empty()));
  for (auto& p : {cube(1), simplex(2), cube(2), simplex(3)}) {
    FormalSum total(Ambient::RP);
    for (auto& [ab, c] : coproduct_RP(p)) total += c * mul_join(RP(ab.first), antipode_RP(RP(ab.second)));
    EXPECT_TRUE(total.is_zero());
  }
}

// chi is an algebra map on the commutative join ring.
TEST(Antipode, Multiplicative) {
  auto ps = small();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(antipode_RP(mul_join(RP(ps[i]), RP(ps[j]))), mul_join(antipode_RP(RP(ps[i])), antipode_RP(RP(ps[j]))));
}

TEST(Comodule, Examples) {
  auto dp = comodule_delta_RP(point());
  ASSERT_EQ(dp.size(), 1u);
  EXPECT_EQ(dp.begin()->first, std::make_pair(point(), empty()));
  auto di = comodule_delta_RP(cube(1));
  EXPECT_EQ(di.size(), 2u);
  EXPECT_EQ(di[std::make_pair(cube(1), empty())], 1);
  EXPECT_EQ(di[std::make_pair(point(), point())], 2);
}

TEST(LAlpha, Examples) {
  auto lp = l_alpha(point());
  ASSERT_EQ(lp.size(), 1u);
  EXPECT_EQ(lp[0], RP(empty()));
  auto li = l_alpha(cube(1));
  EXPECT_EQ(li[0], 2 * RP(point()));
  EXPECT_EQ(li[1], RP(empty()));
  // simple polytopes: sum f_i alpha^i x^{n-i} with x^k the k-1 simplex
  auto lc = l_alpha(cube(3));
  EXPECT_EQ(lc[0], 8 * RP(simplex(2)));
  EXPECT_EQ(lc[1], 12 * RP(simplex(1)));
  EXPECT_EQ(lc[2], 6 * RP(point()));
  EXPECT_EQ(lc[3], RP(empty()));
}

TEST(CoactionR, Examples) {
  auto cp = coaction_R(P(point()));
  ASSERT_EQ(cp.size(), 1u);
  EXPECT_TRUE(cp[0].first.empty());
  EXPECT_EQ(cp[0].second, P(point()));
  auto ci = coaction_R(P(cube(1)));
  ASSERT_EQ(ci.size(), 2u);
  std::map<std::vector<int>, FormalSum> m(ci.begin(), ci.end());
  EXPECT_EQ(m.at({}), P(cube(1)));
  EXPECT_EQ(m.at({1}), 2 * P(point()));
}

TEST(UniqueFactorization, CatalogueProducts) {
  std::vector<Polytope> gens{cube(1), simplex(2), polytope::polygon(5), simplex(3), cone(cube(2))};
  // simplices split as joins, so the join side uses non-pyramids
  std::vector<Polytope> join_gens{point(), cube(2), polytope::polygon(5), cube(3), polytope::cross(3)};
  std::map<std::pair<std::size_t, std::size_t>, Polytope> prod, jn;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      prod.emplace(std::make_pair(i, j), polytope::product(gens[i], gens[j]));
      jn.emplace(std::make_pair(i, j), polytope::join(join_gens[i], join_gens[j]));
    }
  for (auto& [a, p] : prod)
    for (auto& [b, q] : prod) EXPECT_EQ(a == b, p == q);
  for (auto& [a, p] : jn)
    for (auto& [b, q] : jn) EXPECT_EQ(a == b, p == q);
}

TEST(TPoly, Helpers) {
  TPoly a{P(cube(1)), P(point())}, b{P(cube(1))};
  auto s = tpoly_add(a, b);
  EXPECT_EQ(s[0], 2 * P(cube(1)));
  auto sh = tpoly_scale_shift(a, 3, 2);
  ASSERT_EQ(sh.size(), 4u);
  EXPECT_TRUE(sh[0].is_zero());
  EXPECT_EQ(sh[3], 3 * P(point()));
  EXPECT_TRUE(tpoly_equal(a, tpoly_add(a, TPoly{FormalSum(Ambient::P), FormalSum(Ambient::P), FormalSum(Ambient::P)})));
}
