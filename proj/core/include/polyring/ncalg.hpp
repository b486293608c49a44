#ifndef POLYRING_NCALG_HPP
#define POLYRING_NCALG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyring/numeric.hpp"
#include "polyring/qsym.hpp"

namespace polyring::nc {

// A word Z_{w_1} ... Z_{w_l}; the empty word is the unit.
using Word = std::vector<int>;

// Rational combination of words in Z_1, Z_2, ...
class NCPolynomial {
 public:
  NCPolynomial() = default;
  static NCPolynomial one() { return word({}); }
  static NCPolynomial gen(int i) { return word({i}); }
  static NCPolynomial word(const Word& w, const Rational& c = 1);

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  void add(const Word& w, const Rational& c);
  Rational coeff(const Word& w) const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(const Rational& c, const NCPolynomial& a);
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPolynomial& a, const NCPolynomial& b) { return !(a == b); }

  // "Z[2]*Z[1] - 3*Z[3]"
  std::string str() const;

 private:
  std::map<Word, Rational> terms_;
};

NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b);

using NCTensor = std::map<std::pair<Word, Word>, Rational>;
NCTensor leibnitz_coproduct(const NCPolynomial& a);
NCPolynomial tensor_multiply(const NCTensor& t);  // mu
NCPolynomial antipode(const NCPolynomial& a);
Rational counit(const NCPolynomial& a);

// sum_{i=0}^{n} (-1)^i Z_i Z_{n-i} with Z_0 = 1.
NCPolynomial euler_relation(int n);
// Representative modulo the ideal generated by euler_relation(n), n >= 2,
// in which Z_1 occurs at most once and only as the first letter.
NCPolynomial normal_form_U(const NCPolynomial& a);
bool is_basis_word(const Word& w);
// Normal-form basis words of weight n: all parts >= 2, or 1 followed by parts >= 2.
std::vector<Word> basis_words(int n);

// <M_omega, Z_sigma> = delta_{omega, sigma}; alpha-free input.
Rational pairing(const qsym::QSymFunction& m, const NCPolynomial& a);

// A linear functional on the degree-2n part of the quotient algebra,
// stored by its values on the normal-form basis words of weight n.
class DualFunctional {
 public:
  explicit DualFunctional(int n = 0) : n_(n) {}
  // Validates that the given values on all words of weight n vanish on the ideal.
  static DualFunctional from_all_words(int n, const std::map<Word, Rational>& values);

  int weight() const { return n_; }
  const std::map<Word, Rational>& values() const { return values_; }
  void set(const Word& basis_word, const Rational& v);
  Rational operator()(const NCPolynomial& a) const;
  Rational operator()(const Word& w) const { return (*this)(NCPolynomial::word(w)); }
  friend bool operator==(const DualFunctional& a, const DualFunctional& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }
  // "5*d3* + 18*(d2 d)*" style with basis words.
  std::string str() const;

 private:
  int n_;
  std::map<Word, Rational> values_;  // zero values omitted
};

// sum over compositions omega of <psi, D_{omega*}> M_omega
qsym::QSymFunction dstar_to_qsym(const DualFunctional& psi);

// s_1, ..., s_nmax with sum s_k t^k = log(1 + sum Z_k t^k).
std::vector<NCPolynomial> s_series(int nmax);
// Right side of the even-index elimination formula for Z_{2k}.
NCPolynomial d_even_formula(int k);

}  // namespace polyring::nc

#endif
