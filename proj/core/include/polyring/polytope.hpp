#ifndef POLYRING_POLYTOPE_HPP
#define POLYRING_POLYTOPE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyring/numeric.hpp"
#include "polyring/poset.hpp"

namespace polyring::polytope {

using poset::CanonicalKey;
using poset::GradedPoset;

// Flag numbers f_S of an n-dimensional polytope, indexed by the bitmask of
// S over {0, ..., n-1}.
class FlagVector {
 public:
  FlagVector(int n, std::vector<Int> entries) : n_(n), f_(std::move(entries)) {}

  int dim() const { return n_; }
  const std::vector<Int>& entries() const { return f_; }
  const Int& at_mask(unsigned mask) const { return f_[mask]; }
  // Accepts -1 and n in S and drops them.
  Int get(const std::vector<int>& S) const { return f_[mask_of(S, n_)]; }
  static unsigned mask_of(const std::vector<int>& S, int n);
  static std::vector<int> set_of(unsigned mask);

  friend bool operator==(const FlagVector& a, const FlagVector& b) {
    return a.n_ == b.n_ && a.f_ == b.f_;
  }

 private:
  int n_;
  std::vector<Int> f_;
};

// A combinatorial polytope: a face lattice in canonical labeling, with its
// canonical key. Instances with equal keys share storage.
class Polytope {
 public:
  int dim() const;
  bool is_empty() const { return dim() < 0; }
  const GradedPoset& lattice() const;
  const CanonicalKey& key() const;
  std::string digest() const { return poset::key_digest(key()); }
  const FlagVector& flag() const;
  Int flag_number(const std::vector<int>& S) const;
  std::size_t vertex_count() const;
  std::size_t facet_count() const;
  std::vector<std::size_t> rank_profile() const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Polytope& a, const Polytope& b) { return a.d_ != b.d_; }
  friend bool operator<(const Polytope& a, const Polytope& b) { return a.key() < b.key(); }

  struct Data;

 private:
  explicit Polytope(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  friend Polytope make_polytope(const GradedPoset&, bool);
  friend Polytope from_key(const CanonicalKey&);
  std::shared_ptr<const Data> d_;
};

// Canonicalizes and interns. With validate, rejects non-Eulerian lattices.
Polytope make_polytope(const GradedPoset& lattice, bool validate = false);
Polytope from_key(const CanonicalKey& key);

Polytope empty();
Polytope point();
Polytope simplex(int n);
Polytope cube(int n);
Polytope cross(int n);
Polytope polygon(int m);
Polytope cell24();
Polytope build_named(const std::string& name, const std::vector<int>& params);

Polytope from_word(const std::string& word);
Polytope from_incidence(const std::vector<std::vector<int>>& facet_vertex_sets);

Polytope product(const Polytope& p, const Polytope& q);
Polytope join(const Polytope& p, const Polytope& q);
Polytope cone(const Polytope& p);
Polytope bipyramid(const Polytope& p);
Polytope dual_polytope(const Polytope& p);
// The polytope with lattice [F, P]; F is an element of p.lattice().
Polytope face_polytope(const Polytope& p, int face);
// Faces of dimension k as (lattice element, polytope [empty, F]).
std::vector<std::pair<int, Polytope>> faces(const Polytope& p, int k);

FlagVector flag_vector(const Polytope& p);
Int flag_number(const Polytope& p, const std::vector<int>& S);

// Display names recorded when polytopes are built from named generators.
void set_name(const Polytope& p, const std::string& name);
std::optional<std::string> name_of(const Polytope& p);

// Snapshot of every interned polytope, ordered by key.
std::vector<Polytope> registry_snapshot();

}  // namespace polyring::polytope

#endif
