#ifndef POLYRING_TOOLS_CATALOGUE_HPP
#define POLYRING_TOOLS_CATALOGUE_HPP

#include <string>
#include <utility>
#include <vector>

#include "polyring/polytope.hpp"

namespace polyring::cli {

using NamedPolytope = std::pair<std::string, polytope::Polytope>;

// pt, I, polygons up to 8 sides, simplices, cubes and cross-polytopes up to
// dimension 4, CI^2, B Delta^2, the 24-cell and every Omega^n word for n <= 5.
// Combinatorially equal entries appear once, under the first name.
std::vector<NamedPolytope> catalogue(int max_dim = 5);

// Omega^n polytopes as (word, polytope).
std::vector<NamedPolytope> omega_polytopes(int n);

}  // namespace polyring::cli

#endif
