#include "polyhodge/fan.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "polyhodge/errors.hpp"
#include "polyhodge/linalg.hpp"

namespace polyhodge {

namespace {

// Orientation comparison: the facet basis extended by one generator of sigma
// lying outside the facet's span, expressed in sigma's basis.
int incidence_sign(const Cone& tau, const Cone& sigma) {
    const RatVec* inward = nullptr;
    for (const auto& g : sigma.generators) {
        if (!express_in_columns(tau.basis, g).has_value()) {
            inward = &g;
            break;
        }
    }
    assert(inward != nullptr);

    std::vector<RatVec> extended = tau.basis;
    extended.push_back(*inward);
    std::vector<RatVec> change;  // columns of the change-of-basis matrix
    for (const auto& v : extended) {
        auto c = express_in_columns(sigma.basis, v);
        assert(c.has_value());
        change.push_back(*c);
    }
    int s = determinant_sign(change);
    assert(s != 0);
    return s;
}

}  // namespace

int OrientedFan::sign(int tau, int sigma) const {
    const Cone& s = cones[sigma];
    for (size_t i = 0; i < s.facets.size(); ++i)
        if (s.facets[i] == tau) return s.facet_signs[i];
    return 0;
}

void OrientedFan::finalize() {
    max_dim = 0;
    for (const auto& c : cones) max_dim = std::max(max_dim, c.dim);
    by_dim.assign(max_dim + 1, {});
    for (int i = 0; i < static_cast<int>(cones.size()); ++i) by_dim[cones[i].dim].push_back(i);
    for (auto& c : cones) {
        c.facet_signs.clear();
        for (int f : c.facets) c.facet_signs.push_back(incidence_sign(cones[f], c));
    }
}

OrientedFan cone_fan(const Polytope& p, bool include_top) {
    OrientedFan fan;
    if (p.is_empty()) {
        // the cone over the empty polytope is the zero cone in the zero space
        fan.ambient_dim = 0;
        fan.cones.push_back(Cone{});
        fan.finalize();
        return fan;
    }
    const int D = p.dim() + 1;
    fan.ambient_dim = D;

    std::map<int, int> face_to_cone;
    for (int fi = 0; fi < p.face_count(); ++fi) {
        const Face& f = p.face(fi);
        if (!include_top && f.dim == p.dim()) continue;
        Cone c;
        c.dim = f.dim + 1;
        c.source_face = fi;
        for (int v : f.vertex_set) {
            RatVec g = p.vertices()[v];
            g.push_back(1);
            c.generators.push_back(std::move(g));
        }
        for (int idx : greedy_independent_subset(c.generators)) c.basis.push_back(c.generators[idx]);
        assert(static_cast<int>(c.basis.size()) == c.dim);
        face_to_cone[fi] = static_cast<int>(fan.cones.size());
        fan.cones.push_back(std::move(c));
    }
    for (auto& [fi, ci] : face_to_cone) {
        const Face& f = p.face(fi);
        for (int sub : p.subfaces_of(fi, f.dim - 1))
            fan.cones[ci].facets.push_back(face_to_cone.at(sub));
    }
    fan.finalize();
    return fan;
}

OrientedFan normal_fan(const Polytope& p) {
    if (p.is_empty() || p.dim() == 0)
        throw DimensionMismatch("normal_fan: need a polytope of dimension >= 1");
    const int n = p.dim();
    OrientedFan fan;
    fan.ambient_dim = n;

    // inner normals of the facets through each face generate its normal cone
    std::map<int, int> face_to_cone;
    for (int fi = 0; fi < p.face_count(); ++fi) {
        const Face& f = p.face(fi);
        if (f.dim < 0) continue;
        Cone c;
        c.dim = n - f.dim;
        c.source_face = fi;
        for (size_t j = 0; j < p.facet_tight_sets().size(); ++j) {
            const auto& tight = p.facet_tight_sets()[j];
            if (std::includes(tight.begin(), tight.end(), f.vertex_set.begin(),
                              f.vertex_set.end())) {
                RatVec inner = p.facet_normals()[j];
                for (auto& x : inner) x = -x;
                c.generators.push_back(std::move(inner));
            }
        }
        for (int idx : greedy_independent_subset(c.generators)) c.basis.push_back(c.generators[idx]);
        assert(static_cast<int>(c.basis.size()) == c.dim);
        face_to_cone[fi] = static_cast<int>(fan.cones.size());
        fan.cones.push_back(std::move(c));
    }
    // N(g) is a facet of N(f) exactly when f is a facet of g
    for (auto& [fi, ci] : face_to_cone) {
        const Face& f = p.face(fi);
        for (int super : p.superfaces_of(fi, f.dim + 1))
            fan.cones[ci].facets.push_back(face_to_cone.at(super));
    }
    fan.finalize();
    return fan;
}

}  // namespace polyhodge
