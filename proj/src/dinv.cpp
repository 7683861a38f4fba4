#include "polyhodge/dinv.hpp"

#include <algorithm>
#include <cassert>

#include "polyhodge/errors.hpp"
#include "polyhodge/fan.hpp"
#include "polyhodge/system.hpp"

namespace polyhodge {

DProfile d_profile(const Polytope& p, Backend backend) {
    if (p.is_empty()) throw EmptyInput("d_profile: empty polytope");
    auto h = cohomology_dims(assemble(cone_fan(p), SystemSpec::quotient_by_span(), backend),
                             backend);
    DProfile prof;
    prof.method = DProfile::Method::DirectQuotient;
    prof.dims.assign(h.begin(), h.begin() + p.dim() + 1);
    return prof;
}

DProfile d_profile_dual_route(const Polytope& p, Backend backend) {
    DProfile dual = d_profile(polar_dual(p), backend);
    DProfile prof;
    prof.method = DProfile::Method::PolarDual;
    prof.dims.assign(p.dim() + 1, 0);
    for (int k = 0; k <= p.dim(); ++k) prof.dims[k] = dual.dims[p.dim() - k];
    return prof;
}

MinkowskiSpace minkowski_space(const Polytope& p) {
    if (p.dim() < 2) throw DimensionMismatch("minkowski_space: need dim >= 2");
    MinkowskiSpace space;
    space.edges = p.faces_of_dim(1);
    std::vector<int> edge_slot(p.face_count(), -1);
    for (size_t i = 0; i < space.edges.size(); ++i) edge_slot[space.edges[i]] = static_cast<int>(i);

    // one vector equation per 2-face: oriented boundary edges close up
    std::vector<int> two_faces = p.faces_of_dim(2);
    RatMatrix system(static_cast<int>(two_faces.size()) * p.dim(),
                     static_cast<int>(space.edges.size()));
    int row0 = 0;
    for (int f : two_faces) {
        auto cycle = p.polygon_cycle(f);
        for (size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i];
            int w = cycle[(i + 1) % cycle.size()];
            std::vector<int> ev{u, w};
            std::sort(ev.begin(), ev.end());
            int e = edge_slot[p.face_index(ev)];
            assert(e >= 0);
            for (int c = 0; c < p.dim(); ++c)
                system.add(row0 + c, e, p.vertices()[w][c] - p.vertices()[u][c]);
        }
        row0 += p.dim();
    }
    space.basis = kernel_basis(system);
    return space;
}

std::vector<ClosedFormCheck> closed_form_checks(const Polytope& p, Backend backend) {
    std::vector<ClosedFormCheck> out;
    const auto prof = d_profile(p, backend).dims;
    const auto fv = p.f_vector();
    const int n = p.dim();

    auto add = [&](std::string name, bool applicable, long lhs, long rhs) {
        out.push_back({std::move(name), applicable, lhs, rhs, !applicable || lhs == rhs});
    };

    if (n == 2) add("polygon: dim D^1 = f_0 - 3", true, fv.f(0) - 3, prof[1]);
    if (n == 3) {
        add("dim 3: dim D^2 - dim D^1 = f_2 - f_0", true, fv.f(2) - fv.f(0), prof[2] - prof[1]);
        if (p.is_simplicial())
            add("simplicial dim 3: dim D^2 = f_0 - 4", true, fv.f(0) - 4, prof[2]);
    }
    if (p.is_simple()) {
        long tail = 0;
        for (int k = 2; k <= n; ++k) tail += prof[k];
        add("simple: D^k = 0 for k >= 2", true, 0, tail);

        // alternating vertex-count formula for dim D^1, in both reading
        // conventions of the face-count sum (the empty face contributes -1)
        long with_empty = 0, without_empty = 0;
        for (int j = -1; j <= n; ++j) {
            long term = ((j + 1) % 2 == 0 ? 1 : -1) * static_cast<long>(j) * fv.f(j);
            with_empty += term;
            if (j >= 0) without_empty += term;
        }
        add("simple: dim D^1 alternating sum (empty face included)", true, with_empty, prof[1]);
        add("simple: dim D^1 alternating sum (empty face omitted)", true, without_empty, prof[1]);
    }
    for (int ell = n - 1; ell >= 2; --ell) {
        bool all_simplices = true;
        for (int f : p.faces_of_dim(ell))
            if (static_cast<int>(p.face(f).vertex_set.size()) != ell + 1) all_simplices = false;
        if (!all_simplices) continue;
        long low = 0;
        for (int k = 1; k < ell; ++k) low += prof[k];
        add("simplex " + std::to_string(ell) + "-faces: D^k = 0 for k < " + std::to_string(ell),
            true, 0, low);
        break;
    }
    return out;
}

bool normal_fan_sequence_check(const Polytope& p, Backend backend) {
    const auto prof = d_profile(p, backend).dims;
    auto nf = normal_fan(p);
    if (hodge_number(nf, 1, 1, backend) != prof[1] + 1) return false;
    for (int k = 2; k <= p.dim(); ++k)
        if (hodge_number(nf, k, 1, backend) != prof[k]) return false;
    return true;
}

bool double_pyramid_recursion_check(const Polytope& p, Backend backend) {
    const int n = p.dim();
    if (n < 2) throw DimensionMismatch("double_pyramid_recursion_check: need dim >= 2");
    const auto base = d_profile(p, backend).dims;
    const auto dp = d_profile(double_pyramid(p), backend).dims;
    for (int k = 0; k <= n + 1; ++k) {
        int expected = (k >= 1 && k - 1 <= n) ? base[k - 1] : 0;
        if (k == n) expected += 1;
        if (dp[k] != expected) return false;
    }
    return true;
}

}  // namespace polyhodge
