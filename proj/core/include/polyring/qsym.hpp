#ifndef POLYRING_QSYM_HPP
#define POLYRING_QSYM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyring/numeric.hpp"

namespace polyring::qsym {

using Composition = std::vector<int>;

int weight(const Composition& w);

// Order by (weight, length, lexicographic parts).
struct CompositionLess {
  bool operator()(const Composition& a, const Composition& b) const;
};

std::vector<Composition> compositions(int n);

// Polynomial in alpha (variable 0) and t_1..t_r (variables 1..r).
class MultiPoly {
 public:
  explicit MultiPoly(int r = 0) : r_(r) {}
  static MultiPoly constant(int r, const Int& c);
  static MultiPoly var(int r, int i);
  static MultiPoly alpha(int r) { return var(r, 0); }
  static MultiPoly t(int r, int i) { return var(r, i); }

  int r() const { return r_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const std::vector<int>& exps, const Int& c);
  Int coeff(const std::vector<int>& exps) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Int& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // images[i] replaces variable i; all images share one variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // Same polynomial viewed in r' >= used variables.
  MultiPoly with_vars(int r) const;
  bool is_homogeneous(int degree) const;
  std::string str() const;

 private:
  int r_;
  std::map<std::vector<int>, Int> terms_;
};

// Integer combination of alpha^k M_omega.
class QSymFunction {
 public:
  using Key = std::pair<int, Composition>;  // (alpha power, composition)
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };
  using Terms = std::map<Key, Int, KeyLess>;

  QSymFunction() = default;
  static QSymFunction one() { return monomial({}); }
  static QSymFunction monomial(const Composition& w, const Int& c = 1, int alpha = 0);
  static QSymFunction alpha_power(int k, const Int& c = 1) { return monomial({}, c, k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool alpha_free() const;
  int max_degree() const;  // max of alpha power + weight; -1 for zero
  void add(const Composition& w, const Int& c, int alpha = 0);
  Int coeff(const Composition& w, int alpha = 0) const;

  QSymFunction& operator+=(const QSymFunction& o);
  QSymFunction& operator-=(const QSymFunction& o);
  friend QSymFunction operator+(QSymFunction a, const QSymFunction& b) { return a += b; }
  friend QSymFunction operator-(QSymFunction a, const QSymFunction& b) { return a -= b; }
  friend QSymFunction operator*(const Int& c, const QSymFunction& a);
  friend QSymFunction operator*(const QSymFunction& a, const QSymFunction& b);
  friend bool operator==(const QSymFunction& a, const QSymFunction& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QSymFunction& a, const QSymFunction& b) { return !(a == b); }

  // Text form, e.g. "3*M[2,1] - M[1,1,1] + a^2*M[1]".
  std::string str() const;
  // [{"comp": [...], "alpha": k, "coeff": "n"}, ...]
  std::string json() const;

 private:
  Terms terms_;
};

std::map<Composition, Int, CompositionLess> quasi_shuffle(const Composition& a, const Composition& b);
QSymFunction quasi_shuffle(const QSymFunction& a, const QSymFunction& b);

using QTensor = std::map<std::pair<Composition, Composition>, Int>;
// Deconcatenation; alpha-free input only.
QTensor coproduct(const QSymFunction& a);
QSymFunction star(const QSymFunction& a);
QSymFunction sigma(int i);

MultiPoly expand(const QSymFunction& a, int r);
// Inverse of expand on quasi-symmetric polynomials of degree <= r; throws
// if p is not the expansion of a quasi-symmetric function.
QSymFunction lift(const MultiPoly& p);
bool is_quasisymmetric(const MultiPoly& p, int r);
bool theta_invariant(const QSymFunction& a, int k, int n);

}  // namespace polyring::qsym

#endif
