#ifndef POLYRING_TOOLS_IDENTITIES_HPP
#define POLYRING_TOOLS_IDENTITIES_HPP

#include "polyring/polytope.hpp"
#include "polyring/ring.hpp"

namespace polyring::cli {

using polytope::Polytope;
using ring::Ambient;
using ring::FormalSum;

// sum_{i+j=k} (-1)^i d_i d_j P = 0 for every k >= 1.
bool phi_unit(const Polytope& p, Ambient a);

// Commutation rules of Phi(t) with C, B, A and [B, C], in the ambient of s.
bool commutator_d_C(const FormalSum& s);
bool phi_C(const FormalSum& s);
bool phi_B(const FormalSum& s);
bool phi_A(const FormalSum& s);  // RP only
bool phi_BC(const FormalSum& s);

// Hopf and comodule laws.
bool antipode_axiom(const Polytope& p);
bool comodule_coassociative(const Polytope& p);
bool comodule_counit(const Polytope& p);
bool comodule_multiplicative(const Polytope& p, const Polytope& q);
bool comodule_interrelation(const Polytope& p);  // (1 (x) F) Delta_RP = Delta_L
bool F_star_of_l_alpha(const Polytope& p);

// Transform identities.
bool frp_identity(const Polytope& p);  // f_RP = F* + alpha f
bool frp_multiplicative(const Polytope& p, const Polytope& q);
bool join_formula(const Polytope& p, const Polytope& q);
bool cone_formula(const Polytope& p);
bool qsym_operators_P(const Polytope& p);   // f(CP), f(BP), f(AP)
bool qsym_operators_RP(const Polytope& p);  // f_RP and F* versions

}  // namespace polyring::cli

#endif
