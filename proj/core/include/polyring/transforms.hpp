#ifndef POLYRING_TRANSFORMS_HPP
#define POLYRING_TRANSFORMS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyring/ncalg.hpp"
#include "polyring/numeric.hpp"
#include "polyring/polytope.hpp"
#include "polyring/qsym.hpp"
#include "polyring/ring.hpp"

namespace polyring::transforms {

using polytope::FlagVector;
using polytope::Polytope;
using qsym::MultiPoly;
using qsym::QSymFunction;
using ring::FormalSum;

// Generalized f-polynomial: sum_S f_S alpha^{a_1} M_{omega(S)}, alpha^n for S empty.
QSymFunction f_poly(const FlagVector& f);
QSymFunction f_poly(const FormalSum& s);
// xi_alpha Phi(t_r) ... Phi(t_1) P, expanded in alpha, t_1..t_r.
MultiPoly f_poly_operator_route(const Polytope& p, int r);

// Ehrenborg's F. The default route is the flag form.
QSymFunction ehrenborg_F(const FlagVector& f);
QSymFunction ehrenborg_F(const FormalSum& s);
QSymFunction ehrenborg_F_chains(const Polytope& p);
QSymFunction ehrenborg_F_coaction(const FormalSum& s);  // eps_0 of the D_omega terms
QSymFunction F_star(const FormalSum& s);
QSymFunction f_RP(const FlagVector& f);
QSymFunction f_RP(const FormalSum& s);  // eps_alpha of the D_omega terms

enum class Flavor { P, RP, F };
struct EquationResult {
  bool ok = true;
  std::vector<std::string> failed;  // names of failing equations
};
// Checks the image equations of the given flavor. n is the dimension: g must be
// homogeneous of degree n (P) or n + 1 (RP, F), else DomainError.
EquationResult image_equations(const MultiPoly& g, int n, Flavor flavor);
bool verify_image_equations(const MultiPoly& g, int n, Flavor flavor);

bool dehn_sommerville_check(const FlagVector& f);
bool dehn_sommerville_check(const Polytope& p);

// Exact linear algebra.
using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rational>>;
Int determinant(const IntMatrix& m);  // Bareiss
int rank(RatMatrix m);
// Unique solution of a square system; DomainError if singular.
std::vector<Rational> solve(RatMatrix a, std::vector<Rational> b);

// Subsets of {0..n-2} without two consecutive elements, sorted as tuples.
std::vector<std::vector<int>> psi_sets(int n);
// B/C words of length n+1 ending in CC without adjacent B, sorted with C < B.
std::vector<std::string> omega_words(int n);

struct BBBasis {
  int n = 0;
  std::vector<std::vector<int>> psi;
  std::vector<std::string> omega_words;
  std::vector<Polytope> omega;
  IntMatrix matrix;  // matrix[row Q][column S] = f_S(Q)
};
const BBBasis& bb_basis(int n);  // 1 <= n <= 8, cached
Int bb_det(int n);
// Seeds the cache, e.g. from a saved file. Only the shape is checked.
void install_bb_basis(int n, const IntMatrix& matrix);
std::vector<int> cached_bb_dims();

FormalSum project_bb(const FormalSum& s, int n);
FormalSum bb_multiply(const FormalSum& x, const FormalSum& y);

// Operators on QSym[alpha] matching C, A, B on polytopes.
QSymFunction C_qsym(const QSymFunction& g);
QSymFunction A_qsym(const QSymFunction& g);
QSymFunction B_qsym(const QSymFunction& g);
QSymFunction C_RP_qsym(const QSymFunction& g);
QSymFunction A_RP_qsym(const QSymFunction& g);
QSymFunction B_RP_qsym(const QSymFunction& g);
QSymFunction C0_qsym(const QSymFunction& g);
QSymFunction A0_qsym(const QSymFunction& g);
QSymFunction B0_qsym(const QSymFunction& g);

// phi_alpha(P): by_weight[k] holds xi_1(D P) on basis words D of weight k;
// the alpha power of that component is dim P - k.
struct PhiAlpha {
  int n = 0;
  std::vector<nc::DualFunctional> by_weight;
  Rational value(const nc::NCPolynomial& d) const;  // sum over all weights, alpha = 1
};
PhiAlpha phi_alpha(const Polytope& p);
nc::DualFunctional phi0(const Polytope& p);
nc::DualFunctional phi0(const FormalSum& s);
// psi(-alpha) Phi(alpha) = psi(alpha), checked on every basis word.
bool phi_image_law(const PhiAlpha& phi);

// a(s) for rational a: returns (L, L * a(s)) with L the least common denominator.
std::pair<Int, FormalSum> apply_nc(const nc::NCPolynomial& a, const FormalSum& s);

}  // namespace polyring::transforms

#endif
