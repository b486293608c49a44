#ifndef POLYRING_RING_HPP
#define POLYRING_RING_HPP

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polyring/numeric.hpp"
#include "polyring/polytope.hpp"

namespace polyring::ring {

using polytope::Polytope;

// P: the ring under the direct product, the empty polytope excluded.
// RP: the ring under the join, with the empty polytope as unit.
enum class Ambient { P, RP };

// Integer linear combination of polytopes.
class FormalSum {
 public:
  explicit FormalSum(Ambient a = Ambient::RP) : amb_(a) {}
  FormalSum(Ambient a, const Polytope& p, const Int& c = 1) : amb_(a) { add(p, c); }

  Ambient ambient() const { return amb_; }
  const std::map<Polytope, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Polytope& p) const;
  void add(const Polytope& p, const Int& c);

  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  FormalSum& operator*=(const Int& c);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= -1; }
  friend FormalSum operator*(const Int& c, FormalSum a) { return a *= c; }
  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FormalSum& a, const FormalSum& b) { return !(a == b); }

  FormalSum in(Ambient a) const;           // same terms, other ambient
  FormalSum graded(int dim) const;         // terms of one dimension
  int max_dim() const;                     // -2 for the zero sum
  bool is_homogeneous() const;
  std::string str() const;

 private:
  Ambient amb_;
  std::map<Polytope, Int> terms_;
};

FormalSum unit(Ambient a);  // pt for P, empty for RP

FormalSum mul_product(const FormalSum& a, const FormalSum& b);
FormalSum mul_join(const FormalSum& a, const FormalSum& b);

// Sum of codimension-k faces. In RP the k = n+1 face is the empty polytope.
FormalSum d_k(const FormalSum& s, int k);
FormalSum d_k(const Polytope& p, int k, Ambient a);
// Coefficients of Phi(t)s = sum_k t^k d_k s; index 0 is s itself.
std::vector<FormalSum> phi(const FormalSum& s);
// d_{j_1} ... d_{j_l} applied right to left.
FormalSum apply_operator(const std::vector<int>& word, const FormalSum& s);

AlphaPoly xi_alpha(const FormalSum& s);
AlphaPoly epsilon_alpha(const FormalSum& s);

FormalSum cone_op(const FormalSum& s);
FormalSum bipyramid_op(const FormalSum& s);
FormalSum a_op(const FormalSum& s);
FormalSum dual_op(const FormalSum& s);
FormalSum delta_derivation(const FormalSum& s);
FormalSum antipode_RP(const FormalSum& s);

using Tensor2 = std::map<std::pair<Polytope, Polytope>, Int>;
using Tensor3 = std::map<std::tuple<Polytope, Polytope, Polytope>, Int>;

// Rota coproduct on RP: sum over all faces F (empty one included) of F (x) P/F.
Tensor2 coproduct_RP(const Polytope& p);
// Coaction P -> P (x) RP: sum over nonempty faces F of F (x) P/F.
Tensor2 comodule_delta_RP(const Polytope& p);
// alpha power -> sum of quotients P/F over nonempty faces F with dim F = power.
std::map<int, FormalSum> l_alpha(const Polytope& p);
// Pairs (omega, D_omega s) with D_omega s nonzero, omega = (j_1, ..., j_k).
std::vector<std::pair<std::vector<int>, FormalSum>> coaction_R(const FormalSum& s);

// Polynomials in t with FormalSum coefficients.
using TPoly = std::vector<FormalSum>;
TPoly tpoly_add(const TPoly& a, const TPoly& b);
TPoly tpoly_scale_shift(const TPoly& a, const Int& c, int shift);
bool tpoly_equal(const TPoly& a, const TPoly& b);

}  // namespace polyring::ring

#endif
