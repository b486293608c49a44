// Prints one PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "polyring/lyndon.hpp"
#include "polyring/ncalg.hpp"
#include "polyring/transforms.hpp"

using namespace polyring;
using polytope::Polytope;
using qsym::QSymFunction;
using ring::Ambient;
using ring::FormalSum;
using ring::TPoly;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    body();
  } catch (const Failure& f) {
    ok = false;
    detail = f.what;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << ms << " ms)";
  if (!ok) std::cout << " -- " << detail;
  std::cout << std::endl;
  failures += !ok;
}

FormalSum P(const Polytope& p) { return FormalSum(Ambient::P, p); }
FormalSum RP(const Polytope& p) { return FormalSum(Ambient::RP, p); }
QSymFunction M(const qsym::Composition& w, long c = 1) { return QSymFunction::monomial(w, c); }

struct Named {
  std::string name;
  Polytope p;
};

std::vector<Named> catalogue(int max_dim) {
  using namespace polytope;
  std::vector<Named> out{{"pt", point()}, {"I", cube(1)}};
  for (int m = 3; m <= 8; ++m) out.push_back({"polygon(" + std::to_string(m) + ")", polygon(m)});
  for (int n = 2; n <= 4; ++n) {
    out.push_back({"simplex(" + std::to_string(n) + ")", simplex(n)});
    out.push_back({"cube(" + std::to_string(n) + ")", cube(n)});
    out.push_back({"cross(" + std::to_string(n) + ")", cross(n)});
  }
  out.push_back({"CI2", cone(cube(2))});
  out.push_back({"BD2", bipyramid(simplex(2))});
  out.push_back({"cell24", cell24()});
  for (int n = 1; n <= 5; ++n)
    for (auto& w : transforms::omega_words(n)) out.push_back({"word(" + w + ")", from_word(w)});
  std::vector<Named> kept;
  for (auto& e : out)
    if (e.p.dim() <= max_dim) kept.push_back(e);
  return kept;
}

TPoly at(Ambient a, std::initializer_list<std::pair<int, FormalSum>> parts) {
  TPoly r;
  for (auto& [k, x] : parts) {
    if (static_cast<int>(r.size()) <= k) r.resize(k + 1, FormalSum(a));
    r[k] += x;
  }
  return r;
}

TPoly map_op(const TPoly& t, FormalSum (*op)(const FormalSum&)) {
  TPoly r;
  for (auto& x : t) r.push_back(op(x));
  return r;
}

TPoly shift(const TPoly& t) { return ring::tpoly_scale_shift(t, 1, 1); }
TPoly scale(const TPoly& t, long c) { return ring::tpoly_scale_shift(t, c, 0); }
TPoly operator+(const TPoly& a, const TPoly& b) { return ring::tpoly_add(a, b); }

// t xi_t s: each Q goes to t^{dim Q + 1} pt
TPoly t_xi_t(const FormalSum& s) {
  TPoly r;
  for (auto& [q, c] : s.terms()) r = r + at(Ambient::P, {{q.dim() + 1, FormalSum(Ambient::P, polytope::point(), c)}});
  return r;
}

Rational rat_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Int xi0(const FormalSum& s) { return ring::xi_alpha(s).coeff(0); }

}  // namespace

int main() {
  using namespace transforms;

  criterion(1, "Phi(-t)Phi(t) = 1 on the catalogue in P and RP", [] {
    for (auto& [name, p] : catalogue(5))
      for (Ambient a : {Ambient::P, Ambient::RP}) {
        FormalSum s(a, p);
        const int top = p.dim() + 2;
        for (int k = 1; k <= top; ++k) {
          FormalSum total(a);
          for (int i = 0; i <= k; ++i) {
            FormalSum inner = k - i ? ring::d_k(s, k - i) : s;
            FormalSum term = i ? ring::d_k(inner, i) : inner;
            total += (i % 2 ? Int(-1) : Int(1)) * term;
          }
          require(total.is_zero(), name + " k=" + std::to_string(k));
        }
      }
  });

  criterion(2, "K^2, unimodular K^n for n <= 6, |Psi^n| = |Omega^n| = c_n", [] {
    require(bb_basis(2).matrix == IntMatrix{{1, 3}, {1, 4}}, "K^2");
    for (int n = 1; n <= 6; ++n) {
      auto words = omega_words(n);
      auto sets = psi_sets(n);
      std::vector<std::vector<Rational>> m;
      for (auto& w : words) {
        m.emplace_back();
        Polytope q = polytope::from_word(w);
        for (auto& S : sets) m.back().push_back(Rational(q.flag_number(S)));
      }
      Rational d = rat_det(m);
      require(d == 1 || d == -1, "det K^" + std::to_string(n));
      require(Rational(bb_det(n)) == d, "library det K^" + std::to_string(n));
    }
    const std::vector<int> c{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (int n = 1; n <= 10; ++n) {
      require(static_cast<int>(psi_sets(n).size()) == c[n], "|Psi^" + std::to_string(n) + "|");
      require(static_cast<int>(omega_words(n).size()) == c[n], "|Omega^" + std::to_string(n) + "|");
    }
  });

  criterion(3, "phi_0 golden values and kernels", [] {
    using polytope::bipyramid;
    using polytope::cone;
    using polytope::cube;
    using polytope::simplex;
    // (d2 d)* pairs with d_2 applied after d_1
    auto check = [](const Polytope& p, long v3, long v21) {
      auto phi = phi0(p);
      require(phi(nc::Word{3}) == v3 && phi(nc::Word{1, 2}) == v21, "phi0 " + phi.str());
      require(xi0(ring::d_k(P(p), 3)) == v3, "d3 count");
      require(xi0(ring::apply_operator({2, 1}, P(p))) == v21, "d2 d count");
    };
    require(phi0(simplex(2))(nc::Word{2}) == 3 && xi0(ring::d_k(P(simplex(2)), 2)) == 3, "Delta^2");
    require(phi0(cube(2))(nc::Word{2}) == 4, "I^2");
    check(bipyramid(simplex(2)), 5, 18);
    check(cone(bipyramid(cube(1))), 5, 16);
    check(simplex(3), 4, 12);
    require(phi0(Int(3) * P(cube(2)) - Int(4) * P(simplex(2))) == nc::DualFunctional(2), "kernel n=2");
    auto k3 = Int(2) * P(bipyramid(simplex(2))) - Int(6) * P(cone(cube(2))) + Int(5) * P(simplex(3));
    require(phi0(k3) == nc::DualFunctional(3), "kernel n=3");
  });

  criterion(4, "explicit images of F in dimensions 0-3", [] {
    using namespace polytope;
    auto F = [](const FormalSum& s) { return ehrenborg_F(s); };
    auto s1 = qsym::sigma(1), s2 = qsym::sigma(2), s3 = qsym::sigma(3), s4 = qsym::sigma(4);
    FormalSum I2 = RP(cube(2)), D2 = RP(simplex(2)), D3 = RP(simplex(3)), CI2 = RP(cone(cube(2))),
              BD2 = RP(bipyramid(simplex(2)));
    require(F(RP(point())) == M({1}), "pt");
    require(F(RP(cube(1))) == M({2}) + M({1, 1}, 2), "I");
    for (int m = 3; m <= 5; ++m) require(F(RP(polygon(m))) == M({3}) + Int(m) * (s1 * s2 - s3), "polygon");
    require(F(Int(4) * D2 - Int(3) * I2) == M({3}), "4D2 - 3I2");
    require(F(I2 - D2) == s1 * s2 - s3, "I2 - D2");
    require(F(Int(5) * D3 - Int(6) * CI2 + Int(2) * BD2) == M({4}) + M({3, 1}, 2), "5D3 - 6CI2 + 2BD2");
    require(F(-D3 + Int(3) * CI2 - Int(2) * BD2) == M({1, 3}) - M({3, 1}), "-D3 + 3CI2 - 2BD2");
    require(F(BD2 - CI2) == M({2, 2}) + M({3, 1}) + Int(2) * (s1 * s3 - Int(2) * s4), "BD2 - CI2");
  });

  criterion(5, "quasi-shuffle, shuffle and CFL examples", [] {
    using lyndon::Word;
    require(M({1}) * M({1}) == M({2}) + M({1, 1}, 2), "M1 M1");
    require(M({1}) * M({1, 1}) == M({2, 1}) + M({1, 2}) + M({1, 1, 1}, 3), "M1 M11");
    require(M({1, 1}) * M({1, 1}) ==
                M({2, 2}) + M({2, 1, 1}, 2) + M({1, 2, 1}, 2) + M({1, 1, 2}, 2) + M({1, 1, 1, 1}, 6),
            "M11 M11");
    require(lyndon::shuffle(Word{1}, Word{1}) == std::map<Word, Int>{{{1, 1}, 2}}, "[1] x [1]");
    require(lyndon::shuffle(Word{1}, Word{2, 3}) == std::map<Word, Int>{{{1, 2, 3}, 1}, {{2, 1, 3}, 1}, {{2, 3, 1}, 1}},
            "[1] x [2,3]");
    require(lyndon::shuffle(Word{1, 2}, Word{1, 2}) == std::map<Word, Int>{{{1, 2, 1, 2}, 2}, {{1, 1, 2, 2}, 4}},
            "[1,2] x [1,2]");
    require(lyndon::cfl_factorize({1, 1, 1, 1}) == std::vector<Word>{{1}, {1}, {1}, {1}}, "CFL 1111");
    require(lyndon::cfl_factorize({1, 2, 1, 2}) == std::vector<Word>{{1, 2}, {1, 2}}, "CFL 1212");
    require(lyndon::cfl_factorize({2, 1}) == std::vector<Word>{{2}, {1}}, "CFL 21");
  });

  criterion(6, "Lyndon and Fibonacci counts", [] {
    using namespace lyndon;
    const std::vector<Int> k7{1, 1, 1, 1, 2, 2, 4};
    auto series = series_exponents(fibonacci_series(13), 13);
    for (int n = 1; n <= 7; ++n) {
      require(count_lyndon(Alphabet::of({1, 2}), n) == k7[n - 1], "alphabet {1,2}");
      require(odd_generator_count(n) == k7[n - 1], "odd alphabet");
      require(series[n] == k7[n - 1], "series exponents");
    }
    for (int n = 1; n <= 12; ++n) {
      require(k_via_moebius(n) == series[n], "Moebius n=" + std::to_string(n));
      require(series[n + 1] >= series[n] && series[n] >= odd_partition_count(n) - 2, "bounds");
    }
    require(k_prime(5) == 2 && k_prime(7) == 4 && k_prime(11) == 18, "k_p");
    require(series[11] == 18 && odd_partition_count(6) == 4, "k_11, N_6");
    auto v = [](std::vector<long> c) { return std::vector<Int>(c.begin(), c.end()); };
    require(product_polynomial({1, 1}) == v({1, -1, -1, 1}), "product 2");
    require(product_polynomial({1, 1, 1}) == v({1, -1, -1, 0, 1, 1, -1}), "product 3");
    require(product_polynomial({1, 1, 1, 1}) == v({1, -1, -1, 0, 0, 2, 0, 0, -1, -1, 1}), "product 4");
    require(product_polynomial({1, 1, 1, 1, 2}) ==
                v({1, -1, -1, 0, 0, 0, 2, 2, -1, -1, -2, -1, -1, 2, 2, 0, 0, 0, -1, -1, 1}),
            "product 5");
  });

  criterion(7, "image equations on Omega^n, n <= 4, and mutations", [] {
    for (int n = 1; n <= 4; ++n)
      for (auto& w : omega_words(n)) {
        Polytope p = polytope::from_word(w);
        const int r = n + 1;
        require(verify_image_equations(qsym::expand(f_poly(P(p)), r), n, Flavor::P), "f " + w);
        require(verify_image_equations(qsym::expand(f_RP(RP(p)), r), n, Flavor::RP), "f_RP " + w);
        require(verify_image_equations(qsym::expand(ehrenborg_F(RP(p)), r), n, Flavor::F), "F " + w);
        const auto& base = p.flag().entries();
        for (std::size_t m = 1; m < base.size(); ++m) {
          auto e = base;
          e[m] += 1;
          polytope::FlagVector f(n, e);
          bool caught = !verify_image_equations(qsym::expand(f_poly(f), r), n, Flavor::P) &&
                        !verify_image_equations(qsym::expand(f_RP(f), r), n, Flavor::RP) &&
                        !verify_image_equations(qsym::expand(ehrenborg_F(f), r), n, Flavor::F);
          require(caught, "mutation of " + w + " at mask " + std::to_string(m));
        }
      }
  });

  criterion(8, "two routes for f and three routes for F, dim <= 4", [] {
    for (auto& [name, p] : catalogue(4)) {
      const int r = std::max(p.dim(), 1);
      require(f_poly_operator_route(p, r) == qsym::expand(f_poly(p.flag()), r), "f " + name);
      auto F = ehrenborg_F(p.flag());
      require(ehrenborg_F_chains(p) == F, "F chains " + name);
      require(ehrenborg_F_coaction(RP(p)) == F, "F coaction " + name);
    }
  });

  criterion(9, "Hopf and comodule laws", [] {
    using namespace polytope;
    for (auto& p : {point(), cube(1), simplex(2), cube(2)}) {
      FormalSum total(Ambient::RP);
      for (auto& [ab, c] : ring::coproduct_RP(p))
        total += c * ring::mul_join(RP(ab.first), ring::antipode_RP(RP(ab.second)));
      require(total.is_zero(), "antipode");
    }
    std::vector<Polytope> co{simplex(2), cube(2), simplex(3)};
    for (auto& p : co) {
      ring::Tensor3 left, right;
      for (auto& [fq, c] : ring::comodule_delta_RP(p)) {
        for (auto& [gh, d] : ring::comodule_delta_RP(fq.first)) left[{gh.first, gh.second, fq.second}] += c * d;
        for (auto& [gh, d] : ring::coproduct_RP(fq.second)) right[{fq.first, gh.first, gh.second}] += c * d;
      }
      std::erase_if(left, [](auto& t) { return t.second == 0; });
      std::erase_if(right, [](auto& t) { return t.second == 0; });
      require(left == right, "coassociativity");
    }
    for (auto& p : co)
      for (auto& q : co) {
        ring::Tensor2 rhs;
        for (auto& [a, c] : ring::comodule_delta_RP(p))
          for (auto& [b, d] : ring::comodule_delta_RP(q))
            rhs[{product(a.first, b.first), join(a.second, b.second)}] += c * d;
        std::erase_if(rhs, [](auto& t) { return t.second == 0; });
        require(ring::comodule_delta_RP(product(p, q)) == rhs, "multiplicative");
      }
    for (auto& p : {simplex(2), simplex(3)}) {
      std::map<Polytope, QSymFunction> lhs, rhs;
      for (auto& [fq, c] : ring::comodule_delta_RP(p)) lhs[fq.first] += c * ehrenborg_F(RP(fq.second));
      for (auto& [w, d] : ring::coaction_R(P(p)))
        for (auto& [q, c] : d.terms()) rhs[q] += QSymFunction::monomial(w, c);
      std::erase_if(lhs, [](auto& t) { return t.second.is_zero(); });
      std::erase_if(rhs, [](auto& t) { return t.second.is_zero(); });
      require(lhs == rhs, "(1 x F) Delta_RP = Delta_L");
    }
    for (auto& [name, p] : catalogue(3)) {
      QSymFunction total;
      for (auto& [k, s] : ring::l_alpha(p)) total += QSymFunction::alpha_power(k) * F_star(s);
      require(total == f_poly(P(p)), "F*(l_alpha P) " + name);
    }
  });

  criterion(10, "operator identities for d, Phi(t), C, B and their QSym images", [] {
    auto sums = std::vector<FormalSum>{RP(polytope::empty())};
    for (auto& [name, p] : catalogue(3)) {
      sums.push_back(P(p));
      sums.push_back(RP(p));
    }
    for (auto& s : sums) {
      const Ambient a = s.ambient();
      const bool inP = a == Ambient::P;
      const Int e0 = s.coeff(polytope::empty());
      FormalSum cs = ring::cone_op(s), bs = ring::bipyramid_op(s), as = ring::a_op(s);
      FormalSum bc = ring::bipyramid_op(cs) - ring::cone_op(bs);
      const std::string tag = s.str() + (inP ? " in P" : " in RP");

      FormalSum dc = ring::d_k(cs, 1) - ring::cone_op(ring::d_k(s, 1)), id = s;
      if (inP) id.add(polytope::point(), xi0(s));
      require(dc == id, "[d,C] " + tag);

      TPoly ps = ring::phi(s);
      TPoly c_rhs = map_op(ps, ring::cone_op) + shift(ps);
      if (inP) c_rhs = c_rhs + t_xi_t(s);
      require(ring::tpoly_equal(ring::phi(cs), c_rhs), "Phi C " + tag);

      TPoly b_rhs = at(a, {{0, bs - Int(2) * cs}, {1, -s}}) + scale(map_op(ps, ring::cone_op), 2) + shift(ps);
      b_rhs = b_rhs + (inP ? scale(t_xi_t(s), 2) : at(a, {{1, FormalSum(a, polytope::empty(), e0)}}));
      require(ring::tpoly_equal(ring::phi(bs), b_rhs), "Phi B " + tag);

      TPoly bc_rhs = inP ? at(a, {{0, bc}, {1, as}, {2, s}})
                         : at(a, {{0, bc},
                                  {1, as - FormalSum(a, polytope::point(), e0)},
                                  {2, s - FormalSum(a, polytope::empty(), e0)}});
      require(ring::tpoly_equal(ring::phi(bc), bc_rhs), "Phi [B,C] " + tag);
    }
    for (auto& [name, p] : catalogue(3)) {
      require(f_poly(ring::cone_op(P(p))) == C_qsym(f_poly(P(p))), "C_qsym " + name);
      require(f_poly(ring::bipyramid_op(P(p))) == B_qsym(f_poly(P(p))), "B_qsym " + name);
    }
  });

  criterion(11, "structure of the face operator algebra", [] {
    auto s = nc::s_series(4);
    require(nc::normal_form_U(s[1]).is_zero() && nc::normal_form_U(s[3]).is_zero(), "s_2, s_4");
    for (int k = 1; k <= 3; ++k) {
      auto d = nc::d_even_formula(k);
      require(nc::normal_form_U(d - nc::NCPolynomial::gen(2 * k)).is_zero(), "rewriting k=" + std::to_string(k));
      for (auto& p : {polytope::bipyramid(polytope::simplex(2)), polytope::cell24()}) {
        auto [L, lhs] = apply_nc(d, P(p));
        require(lhs == L * ring::d_k(P(p), 2 * k), "action k=" + std::to_string(k));
      }
    }
    for (int n = 1; n <= 8; ++n)
      require(Int(nc::basis_words(n).size()) == lyndon::fibonacci(n - 1), "basis count n=" + std::to_string(n));
    for (int n = 1; n <= 5; ++n) {
      auto words = nc::basis_words(n);
      RatMatrix m;
      for (auto& w : words) {
        m.emplace_back();
        for (auto& q : omega_words(n)) m.back().push_back(Rational(xi0(ring::apply_operator(w, P(polytope::from_word(q))))));
      }
      require(rank(m) == static_cast<int>(words.size()), "rank n=" + std::to_string(n));
    }
  });

  criterion(12, "24-cell", [] {
    std::vector<std::array<int, 4>> verts, normals;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int a : {-1, 1})
          for (int b : {-1, 1}) {
            std::array<int, 4> v{};
            v[i] = a;
            v[j] = b;
            verts.push_back(v);
          }
    for (int i = 0; i < 4; ++i)
      for (int a : {-2, 2}) {
        std::array<int, 4> v{};
        v[i] = a;
        normals.push_back(v);
      }
    for (int m = 0; m < 16; ++m) normals.push_back({m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1, m & 8 ? 1 : -1});
    std::vector<std::vector<int>> facets;
    for (auto& nv : normals) {
      std::vector<int> f;
      for (std::size_t v = 0; v < verts.size(); ++v) {
        int dot = 0;
        for (int k = 0; k < 4; ++k) dot += nv[k] * verts[v][k];
        if (dot == 2) f.push_back(static_cast<int>(v));
      }
      facets.push_back(f);
    }
    Polytope q = polytope::from_incidence(facets);
    require(q.rank_profile() == std::vector<std::size_t>{1, 24, 96, 96, 24, 1}, "rank profile");
    require(polytope::dual_polytope(q).key() == q.key(), "self-dual");
    require(q == polytope::cell24(), "matches the built-in 24-cell");
    using polytope::bipyramid;
    require(ring::d_k(P(q), 1) == Int(24) * P(polytope::cross(3)) &&
                polytope::cross(3) == bipyramid(polytope::cube(2)),
            "dQ = 24 BI^2");
    require(ring::delta_derivation(P(q)) == Int(24) * P(polytope::cube(3)), "delta Q = 24 I^3");
    require(dehn_sommerville_check(q), "Dehn-Sommerville");
  });

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 12 - failures << "/12" << std::endl;
  return failures;
}
