#include "polyring/lyndon.hpp"

#include <algorithm>

namespace polyring::lyndon {

Alphabet Alphabet::of(std::vector<int> letters) {
  for (int x : letters)
    if (x < 1) throw DomainError("alphabet letters must be positive");
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  Alphabet a;
  a.kind_ = Kind::Explicit;
  a.letters_ = std::move(letters);
  return a;
}

Alphabet Alphabet::odd() {
  Alphabet a;
  a.kind_ = Kind::Odd;
  return a;
}

Alphabet Alphabet::naturals() { return Alphabet(); }

bool Alphabet::contains(int x) const {
  switch (kind_) {
    case Kind::Explicit:
      return std::binary_search(letters_.begin(), letters_.end(), x);
    case Kind::Odd:
      return x > 0 && x % 2 == 1;
    default:
      return x > 0;
  }
}

std::vector<int> Alphabet::up_to(int bound) const {
  std::vector<int> out;
  for (int x = 1; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw DomainError("is_lyndon needs a nonempty word");
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  return true;
}

std::vector<Word> cfl_factorize(const Word& w) {
  // Duval
  std::vector<Word> out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + i, w.begin() + i + (j - k));
      i += j - k;
    }
  }
  return out;
}

std::map<Word, Int> shuffle(const Word& u, const Word& v) {
  // table[i][j]: shuffles of the suffixes u[i..], v[j..]
  std::vector<std::vector<std::map<Word, Int>>> table(u.size() + 1, std::vector<std::map<Word, Int>>(v.size() + 1));
  for (std::size_t i = u.size() + 1; i-- > 0;)
    for (std::size_t j = v.size() + 1; j-- > 0;) {
      auto& cell = table[i][j];
      if (i == u.size() && j == v.size()) {
        cell[{}] = 1;
        continue;
      }
      auto extend = [&](int letter, const std::map<Word, Int>& rest) {
        for (auto& [w, c] : rest) {
          Word x{letter};
          x.insert(x.end(), w.begin(), w.end());
          cell[x] += c;
        }
      };
      if (i < u.size()) extend(u[i], table[i + 1][j]);
      if (j < v.size()) extend(v[j], table[i][j + 1]);
    }
  return table[0][0];
}

std::map<Word, Int> shuffle(const std::map<Word, Int>& a, const std::map<Word, Int>& b) {
  std::map<Word, Int> out;
  for (auto& [u, c] : a)
    for (auto& [v, d] : b)
      for (auto& [w, e] : shuffle(u, v)) out[w] += c * d * e;
  std::erase_if(out, [](auto& t) { return t.second == 0; });
  return out;
}

std::vector<Word> lyndon_words(const Alphabet& a, int weight) {
  if (weight < 1) return {};
  const std::vector<int> letters = a.up_to(weight);
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      if (is_lyndon(cur)) out.push_back(cur);
      return;
    }
    for (int x : letters) {
      if (x > left) break;
      // a Lyndon word starts with its least letter
      if (!cur.empty() && x < cur.front()) continue;
      cur.push_back(x);
      self(self, left - x);
      cur.pop_back();
    }
  };
  rec(rec, weight);
  return out;
}

Int count_lyndon(const Alphabet& a, int weight) { return Int(lyndon_words(a, weight).size()); }

Int odd_generator_count(int n) { return count_lyndon(Alphabet::odd(), n) + (n == 2 ? 1 : 0); }

Int fibonacci(int n) {
  if (n < 0) throw DomainError("fibonacci needs n >= 0");
  Int a = 1, b = 1;
  for (int i = 0; i < n; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

Int odd_partition_count(int n) {
  if (n < 0) throw DomainError("odd_partition_count needs n >= 0");
  std::vector<Int> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; part += 2)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

namespace {

// p *= (1 - t^i)^{-k}, truncated at degree nmax
void multiply_power(std::vector<Int>& p, int i, const Int& k) {
  const int nmax = static_cast<int>(p.size()) - 1;
  if (k > 0) {
    for (Int c = 0; c < k; ++c)
      for (int s = i; s <= nmax; ++s) p[s] += p[s - i];
  } else {
    for (Int c = 0; c < -k; ++c)
      for (int s = nmax; s >= i; --s) p[s] -= p[s - i];
  }
}

}  // namespace

std::vector<Int> series_exponents(const std::vector<Int>& target, int nmax) {
  if (target.empty() || target[0] != 1) throw DomainError("target series needs constant term 1");
  if (nmax < 0) throw DomainError("nmax must be >= 0");
  std::vector<Int> ks(nmax + 1, 0);
  std::vector<Int> prod(nmax + 1, 0);
  prod[0] = 1;
  auto coeff = [&](int n) { return n < static_cast<int>(target.size()) ? target[n] : Int(0); };
  for (int n = 1; n <= nmax; ++n) {
    ks[n] = coeff(n) - prod[n];
    multiply_power(prod, n, ks[n]);
  }
  return ks;
}

std::vector<Int> fibonacci_series(int nmax) {
  std::vector<Int> out;
  for (int n = 0; n <= nmax; ++n) out.push_back(fibonacci(n));
  return out;
}

std::vector<Int> beta_target(int nmax) {
  std::vector<Int> out{1};
  for (int n = 1; n <= nmax; ++n) out.push_back(Int(1) << (n - 1));
  return out;
}

std::vector<Int> product_polynomial(const std::vector<int>& exponents) {
  int deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw DomainError("product_polynomial needs nonnegative exponents");
    deg += static_cast<int>(i + 1) * exponents[i];
  }
  std::vector<Int> p(deg + 1, 0);
  p[0] = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) multiply_power(p, static_cast<int>(i + 1), -exponents[i]);
  return p;
}

int moebius(int n) {
  if (n < 1) throw DomainError("moebius needs n >= 1");
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

namespace {

// d * sum_{j=0}^{[d/2]} C(d-j, j)/(d-j)
Int lucas_term(int d) {
  Rational s = 0;
  for (int j = 0; 2 * j <= d; ++j) s += Rational(binomial(d - j, j)) / (d - j);
  return as_integer(s * d);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Int k_via_moebius(int n) {
  if (n < 1) throw DomainError("k_via_moebius needs N >= 1");
  Int s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += lucas_term(d) * moebius(n / d);
  if (s % n != 0) throw DomainError("Moebius sum not divisible by N");
  return s / n;
}

Int k_prime(int p) {
  if (!is_prime(p)) throw DomainError("k_prime needs a prime");
  Rational s = 0;
  for (int j = 1; 2 * j <= p; ++j) s += Rational(binomial(p - j, j)) / (p - j);
  return as_integer(s);
}

}  // namespace polyring::lyndon
