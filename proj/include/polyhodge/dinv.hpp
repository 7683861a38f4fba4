#ifndef POLYHODGE_DINV_HPP
#define POLYHODGE_DINV_HPP

#include <string>
#include <vector>

#include "polyhodge/linalg.hpp"
#include "polyhodge/polytope.hpp"

namespace polyhodge {

/// dim D^0 .. dim D^n for an n-dimensional polytope, plus the route that
/// produced it.
struct DProfile {
    enum class Method { DirectQuotient, SpanShift, PolarDual };
    std::vector<int> dims;
    Method method = Method::DirectQuotient;
};

/// Cohomology of the quotient-by-span system on the fan of cones over faces.
DProfile d_profile(const Polytope& p, Backend backend = Backend::Auto);

/// Same dimensions read off the polar polytope through the duality pairing:
/// dims[k] = dim D^{n-k}(dual).
DProfile d_profile_dual_route(const Polytope& p, Backend backend = Backend::Auto);

/// Space of edge dilation factors subject to the closing condition of every
/// 2-face. Contains the all-ones vector; dimension is dim D^1 + 1.
struct MinkowskiSpace {
    std::vector<int> edges;     // edge face indices of p, in face order
    std::vector<RatVec> basis;  // dilation vectors, coordinates per edge

    int dimension() const { return static_cast<int>(basis.size()); }
};

MinkowskiSpace minkowski_space(const Polytope& p);

/// One closed-form identity evaluated against the direct computation.
/// Mismatches are reported, not thrown.
struct ClosedFormCheck {
    std::string name;
    bool applicable = false;
    long lhs = 0;  // closed-form value
    long rhs = 0;  // value from the direct computation
    bool pass = true;
};

std::vector<ClosedFormCheck> closed_form_checks(const Polytope& p, Backend backend = Backend::Auto);

/// H^{1,1} of the normal fan exceeds dim D^1 by exactly one (the trivial
/// dilation class), and H^{k,1} matches dim D^k for k >= 2.
bool normal_fan_sequence_check(const Polytope& p, Backend backend = Backend::Auto);

/// Profile of the double pyramid against the base profile, shifted with the
/// +1 correction at index dim(p).
bool double_pyramid_recursion_check(const Polytope& p, Backend backend = Backend::Auto);

}  // namespace polyhodge

#endif
