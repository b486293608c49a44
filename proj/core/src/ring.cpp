#include "polyring/ring.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace polyring::ring {

using polytope::GradedPoset;

Int FormalSum::coeff(const Polytope& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Int(0) : it->second;
}

void FormalSum::add(const Polytope& p, const Int& c) {
  if (c == 0) return;
  if (amb_ == Ambient::P && p.is_empty()) throw DomainError("the empty polytope is not an element of P");
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

FormalSum FormalSum::in(Ambient a) const {
  FormalSum r(a);
  for (auto& [p, c] : terms_) r.add(p, c);
  return r;
}

FormalSum FormalSum::graded(int dim) const {
  FormalSum r(amb_);
  for (auto& [p, c] : terms_)
    if (p.dim() == dim) r.add(p, c);
  return r;
}

int FormalSum::max_dim() const {
  int m = -2;
  for (auto& [p, c] : terms_) m = std::max(m, p.dim());
  return m;
}

bool FormalSum::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.dim();
  return std::all_of(terms_.begin(), terms_.end(), [d](auto& t) { return t.first.dim() == d; });
}

std::string FormalSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [p, c0] : terms_) {
    Int c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (c != 1) out += c.str() + "*";
    auto name = polytope::name_of(p);
    out += name ? *name : "lattice" + poset::to_json(p.lattice());
  }
  return out;
}

FormalSum unit(Ambient a) {
  return FormalSum(a, a == Ambient::P ? polytope::point() : polytope::empty());
}

FormalSum mul_product(const FormalSum& a, const FormalSum& b) {
  FormalSum r(a.ambient());
  for (auto& [p, c] : a.terms())
    for (auto& [q, d] : b.terms()) r.add(polytope::product(p, q), c * d);
  return r;
}

FormalSum mul_join(const FormalSum& a, const FormalSum& b) {
  FormalSum r(a.ambient());
  for (auto& [p, c] : a.terms())
    for (auto& [q, d] : b.terms()) r.add(polytope::join(p, q), c * d);
  return r;
}

namespace {

struct DkCache {
  std::shared_mutex mu;
  std::unordered_map<std::string, FormalSum> table;
};

DkCache& dk_cache() {
  static DkCache c;
  return c;
}

}  // namespace

FormalSum d_k(const Polytope& p, int k, Ambient a) {
  if (k <= 0) throw DomainError("d_k needs k >= 1");
  const int n = p.dim();
  FormalSum r(a);
  if (n < 0 || k > n + 1) return r;
  if (k == n + 1) {
    if (a == Ambient::RP) r.add(polytope::empty(), 1);
    return r;
  }
  std::string key = p.key();
  key.push_back('#');
  key += std::to_string(k);
  DkCache& cache = dk_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second.in(a);
  }
  for (auto& [x, f] : polytope::faces(p, n - k)) r.add(f, 1);
  std::unique_lock lock(cache.mu);
  cache.table.emplace(std::move(key), r);
  return r;
}

FormalSum d_k(const FormalSum& s, int k) {
  if (k <= 0) throw DomainError("d_k needs k >= 1");
  FormalSum r(s.ambient());
  for (auto& [p, c] : s.terms()) r += c * d_k(p, k, s.ambient());
  return r;
}

std::vector<FormalSum> phi(const FormalSum& s) {
  std::vector<FormalSum> out{s};
  for (int k = 1; k <= s.max_dim() + 1; ++k) out.push_back(d_k(s, k));
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

FormalSum apply_operator(const std::vector<int>& word, const FormalSum& s) {
  FormalSum r = s;
  for (auto it = word.rbegin(); it != word.rend() && !r.is_zero(); ++it) r = d_k(r, *it);
  return r;
}

AlphaPoly xi_alpha(const FormalSum& s) {
  AlphaPoly r;
  for (auto& [p, c] : s.terms()) {
    if (p.is_empty()) throw DomainError("xi_alpha is not defined on the empty polytope");
    r.add(p.dim(), c);
  }
  return r;
}

AlphaPoly epsilon_alpha(const FormalSum& s) {
  AlphaPoly r;
  for (auto& [p, c] : s.terms()) r.add(p.dim() + 1, c);
  return r;
}

FormalSum cone_op(const FormalSum& s) {
  FormalSum r(s.ambient());
  for (auto& [p, c] : s.terms()) r.add(polytope::cone(p), c);
  return r;
}

FormalSum bipyramid_op(const FormalSum& s) {
  FormalSum r(s.ambient());
  for (auto& [p, c] : s.terms()) r.add(polytope::bipyramid(p), c);
  return r;
}

FormalSum a_op(const FormalSum& s) { return 2 * cone_op(s) - bipyramid_op(s); }

FormalSum dual_op(const FormalSum& s) {
  FormalSum r(s.ambient());
  for (auto& [p, c] : s.terms()) r.add(polytope::dual_polytope(p), c);
  return r;
}

FormalSum delta_derivation(const FormalSum& s) { return dual_op(d_k(dual_op(s), 1)); }

FormalSum antipode_RP(const FormalSum& s) {
  FormalSum r(Ambient::RP);
  for (auto& [p, c] : s.terms()) {
    const GradedPoset& L = p.lattice();
    const int n = static_cast<int>(L.size());
    // partial[y]: signed sum over chains from the bottom to y
    std::vector<FormalSum> partial(n, FormalSum(Ambient::RP));
    partial[L.bottom()] = unit(Ambient::RP);
    for (auto& row : L.by_rank())
      for (int y : row) {
        if (y == L.bottom()) continue;
        L.downset(y).for_each([&](std::size_t x) {
          if (static_cast<int>(x) == y || partial[x].is_zero()) return;
          Polytope gap = polytope::make_polytope(poset::interval(L, static_cast<int>(x), y));
          partial[y] -= mul_join(partial[x], FormalSum(Ambient::RP, gap));
        });
      }
    r += c * partial[L.top()];
  }
  return r;
}

Tensor2 coproduct_RP(const Polytope& p) {
  Tensor2 t;
  const GradedPoset& L = p.lattice();
  for (int z = 0; z < static_cast<int>(L.size()); ++z) {
    Polytope a = polytope::make_polytope(poset::interval(L, L.bottom(), z));
    Polytope b = polytope::make_polytope(poset::interval(L, z, L.top()));
    t[{a, b}] += 1;
  }
  return t;
}

Tensor2 comodule_delta_RP(const Polytope& p) {
  if (p.is_empty()) throw DomainError("the coaction is defined on nonempty polytopes");
  Tensor2 t;
  const GradedPoset& L = p.lattice();
  for (int z = 0; z < static_cast<int>(L.size()); ++z) {
    if (z == L.bottom()) continue;
    Polytope a = polytope::make_polytope(poset::interval(L, L.bottom(), z));
    Polytope b = polytope::make_polytope(poset::interval(L, z, L.top()));
    t[{a, b}] += 1;
  }
  return t;
}

std::map<int, FormalSum> l_alpha(const Polytope& p) {
  std::map<int, FormalSum> out;
  for (auto& [face, quotient] : comodule_delta_RP(p)) {
    auto it = out.try_emplace(face.first.dim(), Ambient::RP).first;
    it->second.add(face.second, quotient);
  }
  return out;
}

std::vector<std::pair<std::vector<int>, FormalSum>> coaction_R(const FormalSum& s) {
  std::vector<std::pair<std::vector<int>, FormalSum>> out;
  const int bound = s.max_dim() + (s.ambient() == Ambient::RP ? 1 : 0);
  // word holds j_i ... j_k; the next operator is prepended
  std::vector<int> word;
  auto rec = [&](auto&& self, const FormalSum& cur, int used) -> void {
    out.emplace_back(word, cur);
    for (int j = 1; used + j <= bound; ++j) {
      FormalSum next = d_k(cur, j);
      if (next.is_zero()) continue;
      word.insert(word.begin(), j);
      self(self, next, used + j);
      word.erase(word.begin());
    }
  };
  if (!s.is_zero()) rec(rec, s, 0);
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
    int wa = 0, wb = 0;
    for (int x : a.first) wa += x;
    for (int x : b.first) wb += x;
    if (wa != wb) return wa < wb;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

TPoly tpoly_add(const TPoly& a, const TPoly& b) {
  TPoly r = a.size() >= b.size() ? a : b;
  const TPoly& o = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < o.size(); ++i) r[i] += o[i];
  return r;
}

TPoly tpoly_scale_shift(const TPoly& a, const Int& c, int shift) {
  if (a.empty()) return a;
  TPoly r(shift, FormalSum(a[0].ambient()));
  for (auto& x : a) r.push_back(c * x);
  return r;
}

bool tpoly_equal(const TPoly& a, const TPoly& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    bool za = i >= a.size() || a[i].is_zero();
    bool zb = i >= b.size() || b[i].is_zero();
    if (za && zb) continue;
    if (za != zb || a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace polyring::ring
