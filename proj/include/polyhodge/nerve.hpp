#ifndef POLYHODGE_NERVE_HPP
#define POLYHODGE_NERVE_HPP

#include <vector>

#include "polyhodge/linalg.hpp"
#include "polyhodge/polytope.hpp"

namespace polyhodge {

/// Nerve of the covering of the ell-skeleton by the ell-faces: strict tuples
/// of cover faces with nonempty intersection, together with the face of the
/// polytope they intersect in.
struct Nerve {
    int ell = 0;
    Polytope poly;
    std::vector<int> cover_faces;  // ell-face indices, in face order

    struct Simplex {
        std::vector<int> members;   // indices into cover_faces, increasing
        int intersection_face = 0;  // face index in poly
    };
    // simplices[k] holds the tuples with k+1 members
    std::vector<std::vector<Simplex>> simplices;

    int max_degree() const { return static_cast<int>(simplices.size()) - 1; }
};

/// Tuples are enumerated up to max_tuple_len members (default ell + 2, which
/// is enough to evaluate e2_entry for p <= ell).
Nerve build_nerve(const Polytope& p, int ell, int max_tuple_len = 0);

/// dim H^p of the nerve complex with fibers D^q(intersection); q in {0, 1}.
/// For q = 1 the fibers are edge-dilation spaces sliced past the trivial
/// summand, and the maps restrict dilation data to the shared edges.
int e2_entry(const Nerve& nv, int p, int q, Backend backend = Backend::Auto);

/// Reduced cohomology dimension of the k-skeleton of a combinatorial face
/// poset, computed from the simplicial order complex of its nonempty faces.
int skeleton_reduced_cohomology(const FacePoset& figure, int k, Backend backend = Backend::Auto);

/// For a polytope whose 3-faces all have trivial D^2: dim D^2 is bounded by
/// the E2^{1,1} entry, and when the flag-system hypothesis holds it matches
/// the flag kernel exactly.
bool d2_rank_bound_check(const Polytope& p, Backend backend = Backend::Auto);

}  // namespace polyhodge

#endif
