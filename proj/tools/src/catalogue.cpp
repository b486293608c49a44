#include "catalogue.hpp"

#include <set>

#include "polyring/transforms.hpp"

namespace polyring::cli {

using namespace polytope;

std::vector<NamedPolytope> omega_polytopes(int n) {
  std::vector<NamedPolytope> out;
  for (auto& w : transforms::omega_words(n)) out.emplace_back(w, from_word(w));
  return out;
}

std::vector<NamedPolytope> catalogue(int max_dim) {
  std::vector<NamedPolytope> all{{"pt", point()}, {"cube(1)", cube(1)}};
  for (int m = 3; m <= 8; ++m) all.emplace_back("polygon(" + std::to_string(m) + ")", polygon(m));
  for (int n = 1; n <= 4; ++n) {
    all.emplace_back("simplex(" + std::to_string(n) + ")", simplex(n));
    all.emplace_back("cube(" + std::to_string(n) + ")", cube(n));
    all.emplace_back("cross(" + std::to_string(n) + ")", cross(n));
  }
  all.emplace_back("C cube(2)", cone(cube(2)));
  all.emplace_back("B simplex(2)", bipyramid(simplex(2)));
  all.emplace_back("cell24", cell24());
  for (int n = 1; n <= 5; ++n)
    for (auto& [w, p] : omega_polytopes(n)) all.emplace_back("word(" + w + ")", p);
  std::vector<NamedPolytope> out;
  std::set<CanonicalKey> seen;
  for (auto& [name, p] : all)
    if (p.dim() <= max_dim && seen.insert(p.key()).second) out.emplace_back(name, p);
  return out;
}

}  // namespace polyring::cli
