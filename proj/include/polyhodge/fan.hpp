#ifndef POLYHODGE_FAN_HPP
#define POLYHODGE_FAN_HPP

#include <vector>

#include "polyhodge/polytope.hpp"

namespace polyhodge {

/// A cone of an oriented fan. The ordered `basis` of its linear span fixes
/// the orientation; `facets`/`facet_signs` record the incidence numbers
/// against each codimension-one face.
struct Cone {
    int dim = 0;
    std::vector<RatVec> generators;  // extreme ray representatives; empty for the zero cone
    std::vector<RatVec> basis;       // ordered basis of the span (orientation)
    std::vector<int> facets;         // indices of facet cones
    std::vector<int> facet_signs;    // incidence sign against facets[i]
    int source_face = -1;            // polytope face this cone arose from
};

/// Fan with a chosen orientation on every cone. The incidence sign of a
/// facet pair compares the facet's orientation, extended by an inward
/// generator, against the bigger cone's orientation; the sign table is what
/// makes the system differentials square to zero.
class OrientedFan {
  public:
    int ambient_dim = 0;
    int max_dim = 0;
    std::vector<Cone> cones;
    std::vector<std::vector<int>> by_dim;  // cone indices per dimension

    /// Incidence sign: +-1 if tau is a facet of sigma, else 0.
    int sign(int tau, int sigma) const;

    void finalize();  // fills by_dim / max_dim and the signs
};

/// Fan of cones over the faces of p, living one dimension up (vertices at
/// height one). Includes the zero cone; `include_top` drops the full cone,
/// giving the boundary fan.
OrientedFan cone_fan(const Polytope& p, bool include_top = true);

/// Complete inner normal fan; cones indexed by nonempty faces of p with
/// reversed dimensions.
OrientedFan normal_fan(const Polytope& p);

}  // namespace polyhodge

#endif
