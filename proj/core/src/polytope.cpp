#include "polyring/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace polyring::polytope {

struct Polytope::Data {
  GradedPoset lattice;
  CanonicalKey key;
  int dim;
  mutable std::once_flag flag_once;
  mutable std::unique_ptr<FlagVector> flag;

  Data(GradedPoset l, CanonicalKey k) : lattice(std::move(l)), key(std::move(k)), dim(lattice.height() - 1) {}
};

namespace {

struct Registry {
  std::shared_mutex mu;
  std::unordered_map<CanonicalKey, std::shared_ptr<const Polytope::Data>> by_key;
  std::unordered_map<CanonicalKey, std::string> names;
};

Registry& registry() {
  static Registry r;
  return r;
}

FlagVector compute_flags(const GradedPoset& L) {
  const int n = L.height() - 1;
  if (n < 0) return FlagVector(-1, {Int(1)});
  const unsigned total = 1u << n;
  std::vector<Int> f(total);
  const auto& by_rank = L.by_rank();
  std::vector<Int> cnt(L.size());
  for (unsigned mask = 0; mask < total; ++mask) {
    std::vector<int> S = FlagVector::set_of(mask);
    if (S.empty()) {
      f[mask] = 1;
      continue;
    }
    int prev = S[0] + 1;
    for (int x : by_rank[prev]) cnt[x] = 1;
    for (std::size_t i = 1; i < S.size(); ++i) {
      int r = S[i] + 1;
      for (int y : by_rank[r]) {
        Int s = 0;
        const auto& below = L.downset(y);
        for (int x : by_rank[prev])
          if (below.test(x)) s += cnt[x];
        cnt[y] = s;
      }
      prev = r;
    }
    Int total_count = 0;
    for (int x : by_rank[prev]) total_count += cnt[x];
    f[mask] = total_count;
  }
  return FlagVector(n, std::move(f));
}

Polytope named(Polytope p, const std::string& name) {
  set_name(p, name);
  return p;
}

}  // namespace

unsigned FlagVector::mask_of(const std::vector<int>& S, int n) {
  unsigned m = 0;
  for (int a : S) {
    if (a == -1 || a == n) continue;
    if (a < -1 || a > n) throw DomainError("flag index out of range");
    m |= 1u << a;
  }
  return m;
}

std::vector<int> FlagVector::set_of(unsigned mask) {
  std::vector<int> S;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1) S.push_back(i);
  return S;
}

int Polytope::dim() const { return d_->dim; }
const GradedPoset& Polytope::lattice() const { return d_->lattice; }
const CanonicalKey& Polytope::key() const { return d_->key; }

const FlagVector& Polytope::flag() const {
  std::call_once(d_->flag_once, [this] { d_->flag = std::make_unique<FlagVector>(compute_flags(d_->lattice)); });
  return *d_->flag;
}

Int Polytope::flag_number(const std::vector<int>& S) const { return flag().get(S); }

std::size_t Polytope::vertex_count() const {
  return dim() < 0 ? 0 : lattice().by_rank()[1].size();
}

std::size_t Polytope::facet_count() const {
  return dim() < 0 ? 0 : lattice().by_rank()[lattice().height() - 1].size();
}

std::vector<std::size_t> Polytope::rank_profile() const {
  std::vector<std::size_t> r;
  for (auto& row : lattice().by_rank()) r.push_back(row.size());
  return r;
}

Polytope make_polytope(const GradedPoset& lattice, bool validate) {
  if (validate && !poset::is_eulerian(lattice)) throw DomainError("not a valid polytope lattice (not Eulerian)");
  poset::Canonical c = poset::canonicalize(lattice);
  Registry& reg = registry();
  {
    std::shared_lock lock(reg.mu);
    auto it = reg.by_key.find(c.key);
    if (it != reg.by_key.end()) return Polytope(it->second);
  }
  auto data = std::make_shared<const Polytope::Data>(poset::relabel(lattice, c.labeling), c.key);
  std::unique_lock lock(reg.mu);
  auto [it, inserted] = reg.by_key.emplace(c.key, data);
  return Polytope(it->second);
}

Polytope from_key(const CanonicalKey& key) {
  {
    Registry& reg = registry();
    std::shared_lock lock(reg.mu);
    auto it = reg.by_key.find(key);
    if (it != reg.by_key.end()) return Polytope(it->second);
  }
  return make_polytope(poset::from_key(key));
}

void set_name(const Polytope& p, const std::string& name) {
  Registry& reg = registry();
  std::unique_lock lock(reg.mu);
  auto [it, inserted] = reg.names.emplace(p.key(), name);
  if (!inserted && (name.size() < it->second.size() || (name.size() == it->second.size() && name < it->second)))
    it->second = name;
}

std::optional<std::string> name_of(const Polytope& p) {
  Registry& reg = registry();
  std::shared_lock lock(reg.mu);
  auto it = reg.names.find(p.key());
  if (it == reg.names.end()) return std::nullopt;
  return it->second;
}

std::vector<Polytope> registry_snapshot() {
  std::vector<CanonicalKey> keys;
  {
    Registry& reg = registry();
    std::shared_lock lock(reg.mu);
    for (auto& [k, v] : reg.by_key) keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Polytope> out;
  for (auto& k : keys) out.push_back(from_key(k));
  return out;
}

Polytope empty() { return named(make_polytope(GradedPoset::unit()), "empty"); }

Polytope point() { return named(make_polytope(GradedPoset::chain(1)), "pt"); }

Polytope simplex(int n) {
  if (n < 0) throw DomainError("simplex dimension must be >= 0");
  if (n > 12) throw DomainError("simplex dimension too large");
  return named(make_polytope(GradedPoset::boolean(n + 1)), "simplex(" + std::to_string(n) + ")");
}

Polytope cube(int n) {
  if (n < 1) throw DomainError("cube dimension must be >= 1");
  Polytope seg = simplex(1);
  Polytope p = seg;
  for (int i = 1; i < n; ++i) p = product(p, seg);
  return named(p, "cube(" + std::to_string(n) + ")");
}

Polytope cross(int n) {
  if (n < 1) throw DomainError("cross-polytope dimension must be >= 1");
  Polytope p = point();
  for (int i = 0; i < n; ++i) p = bipyramid(p);
  return named(p, "cross(" + std::to_string(n) + ")");
}

Polytope polygon(int m) {
  if (m < 3) throw DomainError("polygon needs at least 3 vertices");
  std::vector<int> ranks(2 * m + 2);
  std::vector<std::pair<int, int>> covers;
  const int top = 2 * m + 1;
  ranks[0] = 0;
  ranks[top] = 3;
  for (int i = 0; i < m; ++i) {
    ranks[1 + i] = 1;
    ranks[1 + m + i] = 2;
    covers.emplace_back(0, 1 + i);
    covers.emplace_back(1 + i, 1 + m + i);
    covers.emplace_back(1 + (i + 1) % m, 1 + m + i);
    covers.emplace_back(1 + m + i, top);
  }
  return named(make_polytope(GradedPoset(ranks, covers)), "polygon(" + std::to_string(m) + ")");
}

Polytope cell24() {
  // Vertices +-e_i +-e_j; facets cut out by x.n = 1 for n = +-e_i and
  // n = (+-1/2, ..., +-1/2), tested with doubled integer coordinates.
  std::vector<std::vector<int>> verts;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<int> v(4, 0);
          v[i] = si;
          v[j] = sj;
          verts.push_back(v);
        }
  std::vector<std::vector<int>> normals;  // doubled
  for (int i = 0; i < 4; ++i)
    for (int s : {2, -2}) {
      std::vector<int> nv(4, 0);
      nv[i] = s;
      normals.push_back(nv);
    }
  for (int m = 0; m < 16; ++m) {
    std::vector<int> nv(4);
    for (int i = 0; i < 4; ++i) nv[i] = (m >> i & 1) ? -1 : 1;
    normals.push_back(nv);
  }
  std::vector<std::vector<int>> facets;
  for (auto& nv : normals) {
    std::vector<int> f;
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
      int dot = 0;
      for (int i = 0; i < 4; ++i) dot += nv[i] * verts[v][i];
      if (dot == 2) f.push_back(v);
    }
    facets.push_back(f);
  }
  return named(from_incidence(facets), "cell24");
}

Polytope build_named(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw DomainError(name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "empty") return need(0), empty();
  if (name == "pt") return need(0), point();
  if (name == "cell24") return need(0), cell24();
  if (name == "simplex") return need(1), simplex(params[0]);
  if (name == "cube") return need(1), cube(params[0]);
  if (name == "cross") return need(1), cross(params[0]);
  if (name == "polygon") return need(1), polygon(params[0]);
  throw DomainError("unknown polytope generator: " + name);
}

Polytope from_word(const std::string& word) {
  if (word.empty()) throw DomainError("empty B/C word");
  if (word.back() != 'C' && word.back() != 'B') throw DomainError("invalid letter in B/C word");
  Polytope p = empty();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 'C')
      p = cone(p);
    else if (*it == 'B')
      p = bipyramid(p);
    else
      throw DomainError(std::string("invalid letter in B/C word: ") + *it);
  }
  set_name(p, "word(" + word + ")");
  return p;
}

Polytope from_incidence(const std::vector<std::vector<int>>& facet_vertex_sets) {
  if (facet_vertex_sets.empty()) throw DomainError("not a valid polytope incidence: no facets");
  std::map<int, int> index;
  for (auto& f : facet_vertex_sets)
    for (int v : f) index.emplace(v, 0);
  int nv = 0;
  for (auto& [v, i] : index) i = nv++;
  using poset::Bitset;
  std::vector<Bitset> facets;
  for (auto& f : facet_vertex_sets) {
    Bitset b(nv);
    for (int v : f) b.set(index[v]);
    if (b.none()) throw DomainError("not a valid polytope incidence: empty facet");
    facets.push_back(b);
  }
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && facets[i].is_subset_of(facets[j]))
        throw DomainError("not a valid polytope incidence: nested facets");

  std::vector<Bitset> faces;
  std::map<Bitset, int> seen;
  for (auto& f : facets)
    if (seen.emplace(f, static_cast<int>(faces.size())).second) faces.push_back(f);
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (auto& f : facets) {
      Bitset t = faces[i] & f;
      if (t.none()) continue;
      if (seen.emplace(t, static_cast<int>(faces.size())).second) faces.push_back(t);
    }
  Bitset full(nv);
  for (int v = 0; v < nv; ++v) full.set(v);
  // element 0 = empty face, 1..k = proper faces, k+1 = the polytope
  std::vector<Bitset> elems;
  elems.push_back(Bitset(nv));
  for (auto& f : faces)
    if (!(f == full)) elems.push_back(f);
  elems.push_back(full);
  const int n = static_cast<int>(elems.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return elems[a].count() < elems[b].count(); });
  std::vector<std::vector<int>> below(n);  // strict subsets
  std::vector<std::pair<int, int>> covers;
  std::vector<int> rank(n, 0);
  for (int yi = 0; yi < n; ++yi) {
    int y = order[yi];
    std::vector<int> subs;
    for (int xi = 0; xi < yi; ++xi) {
      int x = order[xi];
      if (elems[x].count() < elems[y].count() && elems[x].is_subset_of(elems[y])) subs.push_back(x);
    }
    for (int x : subs) {
      bool maximal = true;
      for (int z : subs)
        if (z != x && elems[x].count() < elems[z].count() && elems[x].is_subset_of(elems[z])) {
          maximal = false;
          break;
        }
      if (maximal) {
        covers.emplace_back(x, y);
        rank[y] = std::max(rank[y], rank[x] + 1);
      }
    }
  }
  try {
    GradedPoset L(rank, covers);
    if (!poset::is_eulerian(L)) throw DomainError("not Eulerian");
    return make_polytope(L);
  } catch (const DomainError& e) {
    throw DomainError(std::string("not a valid polytope incidence: ") + e.what());
  }
}

Polytope product(const Polytope& p, const Polytope& q) {
  if (p.is_empty() || q.is_empty()) throw DomainError("product is defined for nonempty polytopes only");
  const GradedPoset& A = p.lattice();
  const GradedPoset& B = q.lattice();
  const int nb = static_cast<int>(B.size());
  // element 0 = empty face, then pairs of nonempty faces
  auto id = [&](int i, int j) { return 1 + i * nb + j; };
  std::vector<int> ranks(1 + A.size() * B.size(), -1);
  ranks[0] = 0;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(A.size()); ++i) {
    if (i == A.bottom()) continue;
    for (int j = 0; j < nb; ++j) {
      if (j == B.bottom()) continue;
      ranks[id(i, j)] = A.rank(i) + B.rank(j) - 1;
      if (A.rank(i) == 1 && B.rank(j) == 1) covers.emplace_back(0, id(i, j));
      for (int u : A.up(i)) covers.emplace_back(id(i, j), id(u, j));
      for (int v : B.up(j)) covers.emplace_back(id(i, j), id(i, v));
    }
  }
  // compact away unused slots
  std::vector<int> remap(ranks.size(), -1), r2;
  for (std::size_t x = 0; x < ranks.size(); ++x)
    if (ranks[x] >= 0) {
      remap[x] = static_cast<int>(r2.size());
      r2.push_back(ranks[x]);
    }
  for (auto& [x, y] : covers) x = remap[x], y = remap[y];
  Polytope r = make_polytope(GradedPoset(r2, covers));
  auto np = name_of(p), nq = name_of(q);
  if (np && nq) set_name(r, "prod(" + *np + "," + *nq + ")");
  return r;
}

Polytope join(const Polytope& p, const Polytope& q) {
  Polytope r = make_polytope(poset::poset_product(p.lattice(), q.lattice()));
  auto np = name_of(p), nq = name_of(q);
  if (np && nq) set_name(r, "join(" + *np + "," + *nq + ")");
  return r;
}

Polytope cone(const Polytope& p) {
  Polytope r = make_polytope(poset::poset_product(GradedPoset::chain(1), p.lattice()));
  if (auto np = name_of(p)) set_name(r, "C " + *np);
  return r;
}

Polytope bipyramid(const Polytope& p) {
  if (p.is_empty()) return point();
  const GradedPoset& L = p.lattice();
  const int n = static_cast<int>(L.size());
  const int top = L.top();
  // proper faces keep their index; C_{-1}F -> n + F, C_{+1}F -> 2n + F; apex 3n
  std::vector<int> ranks(3 * n + 1, -1);
  std::vector<std::pair<int, int>> covers;
  const int T = 3 * n;
  ranks[T] = L.height() + 1;
  for (int x = 0; x < n; ++x) {
    if (x == top) continue;
    ranks[x] = L.rank(x);
    ranks[n + x] = ranks[2 * n + x] = L.rank(x) + 1;
    covers.emplace_back(x, n + x);
    covers.emplace_back(x, 2 * n + x);
    for (int y : L.up(x)) {
      if (y == top) {
        covers.emplace_back(n + x, T);
        covers.emplace_back(2 * n + x, T);
      } else {
        covers.emplace_back(x, y);
        covers.emplace_back(n + x, n + y);
        covers.emplace_back(2 * n + x, 2 * n + y);
      }
    }
  }
  std::vector<int> remap(ranks.size(), -1), r2;
  for (std::size_t x = 0; x < ranks.size(); ++x)
    if (ranks[x] >= 0) {
      remap[x] = static_cast<int>(r2.size());
      r2.push_back(ranks[x]);
    }
  for (auto& [x, y] : covers) x = remap[x], y = remap[y];
  Polytope r = make_polytope(GradedPoset(r2, covers));
  if (auto np = name_of(p)) set_name(r, "B " + *np);
  return r;
}

Polytope dual_polytope(const Polytope& p) {
  Polytope r = make_polytope(poset::dual(p.lattice()));
  if (auto np = name_of(p)) set_name(r, "dual(" + *np + ")");
  return r;
}

Polytope face_polytope(const Polytope& p, int face) {
  if (face < 0 || face >= static_cast<int>(p.lattice().size())) throw DomainError("face is not a lattice element");
  return make_polytope(poset::interval(p.lattice(), face, p.lattice().top()));
}

std::vector<std::pair<int, Polytope>> faces(const Polytope& p, int k) {
  std::vector<std::pair<int, Polytope>> out;
  if (k < -1 || k > p.dim()) return out;
  const GradedPoset& L = p.lattice();
  for (int x : L.by_rank()[k + 1]) out.emplace_back(x, make_polytope(poset::interval(L, L.bottom(), x)));
  return out;
}

FlagVector flag_vector(const Polytope& p) { return p.flag(); }

Int flag_number(const Polytope& p, const std::vector<int>& S) { return p.flag_number(S); }

}  // namespace polyring::polytope
