#ifndef POLYHODGE_D2SYS_HPP
#define POLYHODGE_D2SYS_HPP

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyhodge/linalg.hpp"
#include "polyhodge/polytope.hpp"

namespace polyhodge {

/// Sparse linear system in the flag variables s(vertex, 3-face, 2-face)
/// whose kernel is D^2 of the polytope. Requires every 3-face to have
/// trivial D^1 and D^2.
struct FlagSystem {
    struct Var {
        int vertex;
        int two_face;    // face index in the polytope
        int three_face;  // face index in the polytope
    };

    std::vector<Var> vars;
    std::map<std::tuple<int, int, int>, int> var_index;  // (vertex, 2-face, 3-face)
    std::map<int, int> reference_choice;                 // 2-face -> fixed 3-face
    // (2-face, 4-face) -> the two 3-faces in between, ordered by the
    // orientation chain of the cone fan
    std::map<std::pair<int, int>, std::pair<int, int>> between_pairs;

    RatMatrix equations;
    int rows_family1 = 0;  // one per (0,4)-flag
    int rows_family2 = 0;  // ambient+1 per (2,3)-flag
    int rows_family3 = 0;  // one per (0,2)-flag
};

/// Assemble the system. Throws DimensionMismatch for dim < 4 and
/// HypothesisViolated when some 3-face has nonzero D^1 or D^2.
FlagSystem build_flag_system(const Polytope& p, Backend backend = Backend::Auto);

/// dim D^2 via the flag-system kernel; for 3-dimensional input the system
/// route does not apply and the direct cohomology value is returned.
int d2_via_flags(const Polytope& p, Backend backend = Backend::Auto);

/// Checks that signing each quadrilateral alternately (zero on triangle
/// flags) produces a kernel element; false when the alternating pattern is
/// forced into a contradiction.
bool sign_element_check(const Polytope& p, Backend backend = Backend::Auto);

/// Monotone cleaning fixpoint over vertices and 2-faces.
struct CleanState {
    std::set<int> clean_vertices;  // vertex ids
    std::set<int> clean_2faces;    // 2-face indices
    std::vector<std::pair<char, int>> history;  // ('v', vertex) or ('f', face)

    bool everything_clean = false;
};

CleanState clean(const Polytope& p);
/// Same fixpoint, applying applicable rules in a shuffled order.
CleanState clean(const Polytope& p, std::mt19937& rng);

struct Verdict {
    bool vanishes_by_theorem = false;
    std::string reason;  // set when not applicable
};

/// Certificate: every 3-face a pyramid and full cleaning force D^2 = 0.
Verdict certify_vanishing(const Polytope& p);

}  // namespace polyhodge

#endif
