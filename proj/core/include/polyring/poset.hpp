#ifndef POLYRING_POSET_HPP
#define POLYRING_POSET_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace polyring::poset {

// Fixed-size bitset sized at runtime.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  std::size_t and_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }
  friend bool operator==(const Bitset& a, const Bitset& b) { return a.w_ == b.w_; }
  friend bool operator<(const Bitset& a, const Bitset& b) { return a.w_ < b.w_; }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        int b = __builtin_ctzll(x);
        f(i * 64 + b);
        x &= x - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Byte string identifying an isomorphism class of graded posets.
using CanonicalKey = std::string;

// Finite graded poset with a unique bottom and top, stored by its Hasse
// diagram. The order relation is computed on first use and shared by copies.
class GradedPoset {
 public:
  // Validates gradedness; throws DomainError otherwise.
  GradedPoset(std::vector<int> ranks, const std::vector<std::pair<int, int>>& covers);

  static GradedPoset unit();
  static GradedPoset chain(int length);
  static GradedPoset boolean(int atoms);

  std::size_t size() const { return rank_.size(); }
  int rank(int x) const { return rank_[x]; }
  const std::vector<int>& ranks() const { return rank_; }
  int height() const { return rank_[top_]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<int>& up(int x) const { return up_[x]; }
  const std::vector<int>& down(int x) const { return down_[x]; }
  const std::vector<std::vector<int>>& by_rank() const { return by_rank_; }
  std::vector<std::pair<int, int>> covers() const;

  bool leq(int x, int y) const { return upset(x).test(y); }
  const Bitset& upset(int x) const;    // {y : x <= y}
  const Bitset& downset(int x) const;  // {y : y <= x}

 private:
  struct Closure {
    std::once_flag once;
    std::vector<Bitset> up, down;
  };
  void compute_closure() const;

  std::vector<int> rank_;
  std::vector<std::vector<int>> up_, down_, by_rank_;
  int bottom_ = 0, top_ = 0;
  std::shared_ptr<Closure> closure_;
};

GradedPoset interval(const GradedPoset& p, int x, int y);
GradedPoset dual(const GradedPoset& p);
GradedPoset poset_product(const GradedPoset& p, const GradedPoset& q);
std::vector<std::pair<GradedPoset, GradedPoset>> coproduct(const GradedPoset& p);
bool is_eulerian(const GradedPoset& p);

// perm[old] = new index.
GradedPoset relabel(const GradedPoset& p, const std::vector<int>& perm);

struct Canonical {
  CanonicalKey key;
  std::vector<int> labeling;  // labeling[x] = canonical index of x
};
Canonical canonicalize(const GradedPoset& p);
CanonicalKey canonical_form(const GradedPoset& p);
// Inverse of canonical_form: the poset in canonical labeling.
GradedPoset from_key(const CanonicalKey& key);
std::string key_digest(const CanonicalKey& key);  // short hex digest for display

// {"ranks": [...], "covers": [[i, j], ...]}
std::string to_json(const GradedPoset& p);
GradedPoset poset_from_json(const std::string& text);

}  // namespace polyring::poset

#endif
