#ifndef POLYHODGE_TORIC_HPP
#define POLYHODGE_TORIC_HPP

#include "polyhodge/linalg.hpp"
#include "polyhodge/matrix.hpp"
#include "polyhodge/polytope.hpp"

namespace polyhodge {

/// Cone over a lattice polytope placed at height one; the associated affine
/// toric variety is Gorenstein. Degrees live in the dual lattice Z^{n+1}.
struct GorensteinCone {
    Polytope lattice_polytope;  // integer vertices, full-dimensional in Z^n
    IntMatrix generators;       // rows (vertex, 1)
    IntVec rstar;               // the height degree (0,...,0,1)

    int n() const { return lattice_polytope.dim(); }
};

using Degree = IntVec;

/// Throws NonIntegralVertices unless every vertex coordinate is integral.
GorensteinCone gorenstein_cone(const Polytope& p);

/// Pairing of generator nu with a degree vector.
Integer generator_value(const GorensteinCone& c, int nu, const Degree& R);

/// Every edge's two generators extend to a lattice basis.
bool smooth_in_codim2(const GorensteinCone& c);

/// The face of the polytope where R attains one, for degrees with R <= 1
/// everywhere; possibly empty. Throws DegreeNotBounded otherwise.
Polytope restrict_to_face(const GorensteinCone& c, const Degree& R);

/// Graded piece of the cotangent cohomology, k in {1, 2}. Degrees with
/// R <= 1 reduce to D^k of a face; other degrees go through the V^R system
/// (zero by exactness), subject to the smoothness preconditions.
int t_graded(const GorensteinCone& c, int k, const Degree& R, Backend backend = Backend::Auto);

/// The V^R chain complex has no homology when R is not <= 1 on the polytope.
/// Throws PreconditionViolated when R <= 1 everywhere.
bool vr_complex_exactness(const GorensteinCone& c, const Degree& R,
                          Backend backend = Backend::Auto);

/// Every 2-face is a unimodular triangle or a unimodular square.
bool conifold_codim3(const GorensteinCone& c);

/// Classifies the generator values on each cone-over-square 3-face and
/// confirms the local T^2 contribution vanishes in every case.
/// Throws PreconditionViolated unless conifold_codim3 holds.
bool t2_local_contribution_conifold_check(const GorensteinCone& c, const Degree& R);

}  // namespace polyhodge

#endif
