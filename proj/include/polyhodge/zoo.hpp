#ifndef POLYHODGE_ZOO_HPP
#define POLYHODGE_ZOO_HPP

#include <string>
#include <vector>

#include "polyhodge/polytope.hpp"

namespace polyhodge {

/// Built-in instances: simplex(n), cube(n), crosspoly(n), mgon(m),
/// pyramid_mgon(m), bipyramid_mgon(m), icosahedron, cuboctahedron,
/// dp_cuboctahedron, prism_triangle, cyclic(d,n), unit_square_lattice,
/// unit_cube_lattice. Throws UnknownName for anything else.
Polytope zoo(const std::string& name);

std::vector<std::string> zoo_names();

}  // namespace polyhodge

#endif
