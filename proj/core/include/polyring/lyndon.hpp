#ifndef POLYRING_LYNDON_HPP
#define POLYRING_LYNDON_HPP

#include <map>
#include <vector>

#include "polyring/numeric.hpp"

namespace polyring::lyndon {

using Word = std::vector<int>;

// Totally ordered alphabet of positive integers, possibly infinite.
class Alphabet {
 public:
  static Alphabet of(std::vector<int> letters);
  static Alphabet odd();
  static Alphabet naturals();

  bool contains(int x) const;
  // Letters not exceeding bound, increasing.
  std::vector<int> up_to(int bound) const;

 private:
  enum class Kind { Explicit, Odd, All };
  Kind kind_ = Kind::All;
  std::vector<int> letters_;
};

bool is_lyndon(const Word& w);
// Chen-Fox-Lyndon factorization, factors weakly decreasing.
std::vector<Word> cfl_factorize(const Word& w);
std::map<Word, Int> shuffle(const Word& u, const Word& v);
std::map<Word, Int> shuffle(const std::map<Word, Int>& a, const std::map<Word, Int>& b);

// Lyndon words of total weight (sum of letters), in lexicographic order.
std::vector<Word> lyndon_words(const Alphabet& a, int weight);
Int count_lyndon(const Alphabet& a, int weight);
// Generators of degree 2n of Q[Lyn_odd, alpha^2]: the alpha^2 generator sits in n = 2.
Int odd_generator_count(int n);

Int fibonacci(int n);  // c_0 = c_1 = 1
Int odd_partition_count(int n);

// k_1..k_nmax (index 0 unused) with prod (1 - t^i)^{-k_i} = target through degree nmax.
std::vector<Int> series_exponents(const std::vector<Int>& target, int nmax);
std::vector<Int> fibonacci_series(int nmax);
std::vector<Int> beta_target(int nmax);  // (1 - t)/(1 - 2t)
// Full expansion of prod_i (1 - t^i)^{e_i}, e_i >= 0 given from i = 1.
std::vector<Int> product_polynomial(const std::vector<int>& exponents);

int moebius(int n);
Int k_via_moebius(int n);
Int k_prime(int p);

}  // namespace polyring::lyndon

#endif
