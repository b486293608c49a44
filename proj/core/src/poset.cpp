#include "polyring/poset.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "json.hpp"
#include "polyring/numeric.hpp"

namespace polyring::poset {

GradedPoset::GradedPoset(std::vector<int> ranks, const std::vector<std::pair<int, int>>& covers)
    : rank_(std::move(ranks)), closure_(std::make_shared<Closure>()) {
  const int n = static_cast<int>(rank_.size());
  if (n == 0) throw DomainError("poset must be nonempty");
  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [x, y] : covers) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw DomainError("cover index out of range");
    if (rank_[y] != rank_[x] + 1) throw DomainError("cover pair does not raise rank by one");
    up_[x].push_back(y);
    down_[y].push_back(x);
  }
  for (int x = 0; x < n; ++x) {
    std::sort(up_[x].begin(), up_[x].end());
    std::sort(down_[x].begin(), down_[x].end());
    if (std::adjacent_find(up_[x].begin(), up_[x].end()) != up_[x].end())
      throw DomainError("duplicate cover pair");
  }
  int max_rank = *std::max_element(rank_.begin(), rank_.end());
  if (*std::min_element(rank_.begin(), rank_.end()) != 0) throw DomainError("ranks must start at 0");
  by_rank_.assign(max_rank + 1, {});
  for (int x = 0; x < n; ++x) by_rank_[rank_[x]].push_back(x);
  if (by_rank_[0].size() != 1) throw DomainError("poset needs a unique bottom");
  if (by_rank_[max_rank].size() != 1) throw DomainError("poset needs a unique top");
  bottom_ = by_rank_[0][0];
  top_ = by_rank_[max_rank][0];
  for (int x = 0; x < n; ++x) {
    if (x != bottom_ && down_[x].empty()) throw DomainError("element not above the bottom");
    if (x != top_ && up_[x].empty()) throw DomainError("element not below the top");
  }
}

GradedPoset GradedPoset::unit() { return GradedPoset({0}, {}); }

GradedPoset GradedPoset::chain(int length) {
  std::vector<int> r(length + 1);
  std::iota(r.begin(), r.end(), 0);
  std::vector<std::pair<int, int>> c;
  for (int i = 0; i < length; ++i) c.emplace_back(i, i + 1);
  return GradedPoset(r, c);
}

GradedPoset GradedPoset::boolean(int atoms) {
  const int n = 1 << atoms;
  std::vector<int> r(n);
  std::vector<std::pair<int, int>> c;
  for (int s = 0; s < n; ++s) {
    r[s] = __builtin_popcount(s);
    for (int i = 0; i < atoms; ++i)
      if (!(s >> i & 1)) c.emplace_back(s, s | 1 << i);
  }
  return GradedPoset(r, c);
}

std::vector<std::pair<int, int>> GradedPoset::covers() const {
  std::vector<std::pair<int, int>> c;
  for (int x = 0; x < static_cast<int>(size()); ++x)
    for (int y : up_[x]) c.emplace_back(x, y);
  return c;
}

void GradedPoset::compute_closure() const {
  std::call_once(closure_->once, [this] {
    const int n = static_cast<int>(size());
    std::vector<Bitset> up(n, Bitset(n)), down(n, Bitset(n));
    for (int r = static_cast<int>(by_rank_.size()) - 1; r >= 0; --r)
      for (int x : by_rank_[r]) {
        up[x].set(x);
        for (int y : up_[x]) up[x] |= up[y];
      }
    for (int r = 0; r < static_cast<int>(by_rank_.size()); ++r)
      for (int x : by_rank_[r]) {
        down[x].set(x);
        for (int y : down_[x]) down[x] |= down[y];
      }
    closure_->up = std::move(up);
    closure_->down = std::move(down);
  });
}

const Bitset& GradedPoset::upset(int x) const {
  compute_closure();
  return closure_->up[x];
}

const Bitset& GradedPoset::downset(int x) const {
  compute_closure();
  return closure_->down[x];
}

GradedPoset interval(const GradedPoset& p, int x, int y) {
  if (!p.leq(x, y)) throw DomainError("interval endpoints are not comparable");
  Bitset members = p.upset(x) & p.downset(y);
  std::vector<int> index(p.size(), -1), ranks;
  int k = 0;
  members.for_each([&](std::size_t z) {
    index[z] = k++;
    ranks.push_back(p.rank(z) - p.rank(x));
  });
  std::vector<std::pair<int, int>> covers;
  members.for_each([&](std::size_t z) {
    for (int w : p.up(z))
      if (index[w] >= 0) covers.emplace_back(index[z], index[w]);
  });
  return GradedPoset(std::move(ranks), covers);
}

GradedPoset dual(const GradedPoset& p) {
  std::vector<int> ranks(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) ranks[x] = p.height() - p.rank(x);
  std::vector<std::pair<int, int>> covers;
  for (auto [x, y] : p.covers()) covers.emplace_back(y, x);
  return GradedPoset(std::move(ranks), covers);
}

GradedPoset poset_product(const GradedPoset& p, const GradedPoset& q) {
  const int m = static_cast<int>(q.size());
  std::vector<int> ranks(p.size() * q.size());
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = 0; j < m; ++j) {
      ranks[i * m + j] = p.rank(i) + q.rank(j);
      for (int u : p.up(i)) covers.emplace_back(i * m + j, u * m + j);
      for (int v : q.up(j)) covers.emplace_back(i * m + j, i * m + v);
    }
  return GradedPoset(std::move(ranks), covers);
}

std::vector<std::pair<GradedPoset, GradedPoset>> coproduct(const GradedPoset& p) {
  std::vector<std::pair<GradedPoset, GradedPoset>> out;
  for (int z = 0; z < static_cast<int>(p.size()); ++z)
    out.emplace_back(interval(p, p.bottom(), z), interval(p, z, p.top()));
  return out;
}

bool is_eulerian(const GradedPoset& p) {
  const int n = static_cast<int>(p.size());
  Bitset even(n);
  for (int x = 0; x < n; ++x)
    if (p.rank(x) % 2 == 0) even.set(x);
  for (int x = 0; x < n; ++x) {
    const Bitset& above = p.upset(x);
    bool ok = true;
    above.for_each([&](std::size_t y) {
      if (!ok || static_cast<int>(y) == x) return;
      Bitset between = above & p.downset(y);
      std::size_t e = between.and_count(even);
      if (2 * e != between.count()) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

GradedPoset relabel(const GradedPoset& p, const std::vector<int>& perm) {
  std::vector<int> ranks(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) ranks[perm[x]] = p.rank(x);
  std::vector<std::pair<int, int>> covers;
  for (auto [x, y] : p.covers()) covers.emplace_back(perm[x], perm[y]);
  return GradedPoset(std::move(ranks), covers);
}

// ---------------------------------------------------------------------------
// Canonical labeling: colour refinement on the Hasse diagram seeded by rank,
// individualization of one element of the first non-singleton cell, and a
// search for the lexicographically least leaf encoding. Automorphisms found
// at equal leaves prune siblings in the same orbit of the pointwise
// stabilizer of the current prefix.

namespace {

class Canonizer {
 public:
  explicit Canonizer(const GradedPoset& p) : p_(p), n_(static_cast<int>(p.size())) {}

  Canonical run() {
    std::vector<int> color(n_);
    for (int x = 0; x < n_; ++x) color[x] = p_.rank(x);
    std::vector<int> prefix;
    search(std::move(color), prefix);
    Canonical c;
    c.labeling = best_lab_;
    c.key = serialize(best_enc_);
    return c;
  }

 private:
  int refine(std::vector<int>& color) const {
    std::vector<int> order(n_);
    std::vector<std::vector<int>> sig(n_);
    int ncol = 0;
    {
      std::vector<int> tmp = color;
      std::sort(tmp.begin(), tmp.end());
      ncol = static_cast<int>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
    }
    while (true) {
      for (int x = 0; x < n_; ++x) {
        auto& s = sig[x];
        s.clear();
        s.push_back(color[x]);
        std::size_t a = s.size();
        for (int y : p_.up(x)) s.push_back(color[y]);
        std::sort(s.begin() + a, s.end());
        s.push_back(-1);
        a = s.size();
        for (int y : p_.down(x)) s.push_back(color[y]);
        std::sort(s.begin() + a, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int c = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
        color[order[i]] = c;
      }
      int next = c + 1;
      if (next == ncol) return ncol;
      ncol = next;
    }
  }

  std::vector<int> encode(const std::vector<int>& lab) const {
    std::vector<int> inv(n_);
    for (int x = 0; x < n_; ++x) inv[lab[x]] = x;
    std::vector<int> enc;
    enc.reserve(3 * n_);
    enc.push_back(n_);
    std::vector<int> ups;
    for (int l = 0; l < n_; ++l) {
      int x = inv[l];
      enc.push_back(p_.rank(x));
      ups.clear();
      for (int y : p_.up(x)) ups.push_back(lab[y]);
      std::sort(ups.begin(), ups.end());
      enc.push_back(static_cast<int>(ups.size()));
      enc.insert(enc.end(), ups.begin(), ups.end());
    }
    return enc;
  }

  void leaf(const std::vector<int>& lab) {
    std::vector<int> enc = encode(lab);
    if (best_enc_.empty() || enc < best_enc_) {
      best_enc_ = std::move(enc);
      best_lab_ = lab;
      best_inv_.assign(n_, 0);
      for (int x = 0; x < n_; ++x) best_inv_[lab[x]] = x;
    } else if (enc == best_enc_) {
      std::vector<int> gamma(n_);
      for (int x = 0; x < n_; ++x) gamma[x] = best_inv_[lab[x]];
      autos_.push_back(std::move(gamma));
    }
  }

  int find(std::vector<int>& uf, int x) const {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  void search(std::vector<int> color, std::vector<int>& prefix) {
    int k = refine(color);
    if (k == n_) {
      leaf(color);
      return;
    }
    std::vector<int> size(k, 0);
    for (int x = 0; x < n_; ++x) ++size[color[x]];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> cell;
    for (int x = 0; x < n_; ++x)
      if (color[x] == target) cell.push_back(x);

    std::vector<int> tried;
    std::size_t autos_seen = 0;
    std::vector<int> uf(n_);
    std::iota(uf.begin(), uf.end(), 0);
    for (int v : cell) {
      for (; autos_seen < autos_.size(); ++autos_seen) {
        const auto& g = autos_[autos_seen];
        bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int u) { return g[u] == u; });
        if (!fixes) continue;
        for (int x = 0; x < n_; ++x) {
          int a = find(uf, x), b = find(uf, g[x]);
          if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
      }
      int rv = find(uf, v);
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return find(uf, u) == rv; })) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int x = 0; x < n_; ++x) next[x] = 2 * color[x] + (color[x] == target && x != v ? 1 : 0);
      prefix.push_back(v);
      search(std::move(next), prefix);
      prefix.pop_back();
    }
  }

  static CanonicalKey serialize(const std::vector<int>& enc) {
    CanonicalKey out;
    for (int v : enc) {
      unsigned u = static_cast<unsigned>(v);
      while (u >= 0x80) {
        out.push_back(static_cast<char>((u & 0x7f) | 0x80));
        u >>= 7;
      }
      out.push_back(static_cast<char>(u));
    }
    return out;
  }

  const GradedPoset& p_;
  int n_;
  std::vector<int> best_enc_, best_lab_, best_inv_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

Canonical canonicalize(const GradedPoset& p) { return Canonizer(p).run(); }

CanonicalKey canonical_form(const GradedPoset& p) { return canonicalize(p).key; }

GradedPoset from_key(const CanonicalKey& key) {
  std::size_t pos = 0;
  auto next = [&]() {
    unsigned v = 0;
    int shift = 0;
    while (true) {
      if (pos >= key.size()) throw DomainError("truncated canonical key");
      unsigned char b = static_cast<unsigned char>(key[pos++]);
      v |= static_cast<unsigned>(b & 0x7f) << shift;
      if (!(b & 0x80)) break;
      shift += 7;
    }
    return static_cast<int>(v);
  };
  int n = next();
  std::vector<int> ranks(n);
  std::vector<std::pair<int, int>> covers;
  for (int l = 0; l < n; ++l) {
    ranks[l] = next();
    int c = next();
    for (int i = 0; i < c; ++i) covers.emplace_back(l, next());
  }
  if (pos != key.size()) throw DomainError("trailing bytes in canonical key");
  return GradedPoset(std::move(ranks), covers);
}

std::string key_digest(const CanonicalKey& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_json(const GradedPoset& p) {
  nlohmann::json j;
  j["ranks"] = p.ranks();
  nlohmann::json c = nlohmann::json::array();
  for (auto [x, y] : p.covers()) c.push_back({x, y});
  j["covers"] = c;
  return j.dump();
}

GradedPoset poset_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid poset JSON: ") + e.what());
  }
  if (!j.contains("ranks") || !j.contains("covers")) throw DomainError("poset JSON needs ranks and covers");
  std::vector<int> ranks = j["ranks"].get<std::vector<int>>();
  std::vector<std::pair<int, int>> covers;
  for (auto& c : j["covers"]) covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return GradedPoset(std::move(ranks), covers);
}

}  // namespace polyring::poset
