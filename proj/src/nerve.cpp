#include "polyhodge/nerve.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "polyhodge/d2sys.hpp"
#include "polyhodge/dinv.hpp"
#include "polyhodge/errors.hpp"

namespace polyhodge {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Nerve build_nerve(const Polytope& p, int ell, int max_tuple_len) {
    if (ell < 2 || ell > p.dim() - 1)
        throw DimensionOutOfRange("build_nerve: need 2 <= ell <= dim - 1");
    Nerve nv;
    nv.ell = ell;
    nv.poly = p;
    nv.cover_faces = p.faces_of_dim(ell);
    if (max_tuple_len <= 0) max_tuple_len = ell + 2;
    nv.simplices.assign(max_tuple_len, {});

    const int m = static_cast<int>(nv.cover_faces.size());
    // depth-first extension; the running intersection only shrinks
    std::vector<int> stack;
    auto extend = [&](auto&& self, const std::vector<int>& current_vs) -> void {
        int len = static_cast<int>(stack.size());
        if (len > 0) {
            int fi = p.face_index(current_vs);
            assert(fi >= 0);  // intersections of faces are faces
            nv.simplices[len - 1].push_back({stack, fi});
        }
        if (len == max_tuple_len) return;
        int start = stack.empty() ? 0 : stack.back() + 1;
        for (int next = start; next < m; ++next) {
            auto vs = stack.empty()
                          ? p.face(nv.cover_faces[next]).vertex_set
                          : intersect_sorted(current_vs, p.face(nv.cover_faces[next]).vertex_set);
            if (vs.empty()) continue;
            stack.push_back(next);
            self(self, vs);
            stack.pop_back();
        }
    };
    extend(extend, {});
    return nv;
}

namespace {

// Edge-dilation fiber of a face: the dilation space of the face sliced along
// the all-ones vector (first edge pinned to zero), which realizes D^1.
struct DilationFiber {
    std::vector<int> edges;       // edge face indices, in face order
    std::vector<RatVec> basis;    // slice vectors, coordinates per edge

    int dim() const { return static_cast<int>(basis.size()); }
};

DilationFiber dilation_fiber(const Polytope& p, int face) {
    DilationFiber fib;
    if (p.face(face).dim < 2) return fib;
    fib.edges = p.subfaces_of(face, 1);
    std::map<int, int> slot;
    for (size_t i = 0; i < fib.edges.size(); ++i) slot[fib.edges[i]] = static_cast<int>(i);

    auto two_faces = p.subfaces_of(face, 2);
    RatMatrix system(static_cast<int>(two_faces.size()) * p.dim(),
                     static_cast<int>(fib.edges.size()));
    int row0 = 0;
    for (int f : two_faces) {
        auto cycle = p.polygon_cycle(f);
        for (size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i];
            int w = cycle[(i + 1) % cycle.size()];
            std::vector<int> ev{u, w};
            std::sort(ev.begin(), ev.end());
            int e = slot.at(p.face_index(ev));
            for (int c = 0; c < p.dim(); ++c)
                system.add(row0 + c, e, p.vertices()[w][c] - p.vertices()[u][c]);
        }
        row0 += p.dim();
    }

    auto kernel = kernel_basis(system, Backend::Serial);
    // project away the all-ones direction and keep an independent set
    std::vector<RatVec> sliced;
    for (auto& k : kernel) {
        RatVec v = k;
        Rational pin = v[0];
        for (auto& x : v) x -= pin;
        sliced.push_back(std::move(v));
    }
    for (int idx : greedy_independent_subset(sliced)) fib.basis.push_back(sliced[idx]);
    return fib;
}

// dilation data of `from` restricted to the edges of `to`, re-sliced and
// expressed in `to`'s fiber basis
RatMatrix dilation_restriction(const Polytope& p, const DilationFiber& from,
                               const DilationFiber& to) {
    std::map<int, int> from_slot;
    for (size_t i = 0; i < from.edges.size(); ++i) from_slot[from.edges[i]] = static_cast<int>(i);
    RatMatrix out(to.dim(), from.dim());
    for (int j = 0; j < from.dim(); ++j) {
        RatVec restricted(to.edges.size());
        for (size_t i = 0; i < to.edges.size(); ++i)
            restricted[i] = from.basis[j][from_slot.at(to.edges[i])];
        Rational pin = restricted.empty() ? Rational(0) : restricted[0];
        for (auto& x : restricted) x -= pin;
        auto c = express_in_columns(to.basis, restricted);
        assert(c.has_value());
        for (int i = 0; i < to.dim(); ++i) out.set(i, j, (*c)[i]);
    }
    (void)p;
    return out;
}

}  // namespace

int e2_entry(const Nerve& nv, int p, int q, Backend backend) {
    if (q != 0 && q != 1) throw UnsupportedSpec("e2_entry: q must be 0 or 1");
    const int len = static_cast<int>(nv.simplices.size());
    int last_nonempty = -1;
    for (int d = 0; d < len; ++d)
        if (!nv.simplices[d].empty()) last_nonempty = d;
    // degrees past an observed empty level are genuinely zero; otherwise the
    // enumeration must cover p+1
    const bool ends_inside = (last_nonempty + 1 < len);
    if (p < 0 || !(p + 2 <= len || ends_inside))
        throw DimensionOutOfRange("e2_entry: p beyond the enumerated tuples");
    const Polytope& poly = nv.poly;

    // fiber dimensions per intersection face
    std::map<int, DilationFiber> dil;
    auto fiber_dim = [&](int face) -> int {
        if (q == 0) return poly.face(face).dim == 0 ? 1 : 0;
        if (poly.face(face).dim < 2) return 0;
        auto it = dil.find(face);
        if (it == dil.end()) it = dil.emplace(face, dilation_fiber(poly, face)).first;
        return it->second.dim();
    };

    // block offsets per degree d for d in {p-1, p, p+1}
    auto layout = [&](int d, std::vector<int>& offsets) -> int {
        int total = 0;
        if (d < 0 || d > nv.max_degree()) return 0;
        offsets.assign(nv.simplices[d].size(), -1);
        for (size_t i = 0; i < nv.simplices[d].size(); ++i) {
            int fd = fiber_dim(nv.simplices[d][i].intersection_face);
            if (fd > 0) {
                offsets[i] = total;
                total += fd;
            }
        }
        return total;
    };

    // index lookup for tuples of a given degree
    auto tuple_lookup = [&](int d) {
        std::map<std::vector<int>, int> lut;
        if (d >= 0 && d <= nv.max_degree())
            for (size_t i = 0; i < nv.simplices[d].size(); ++i)
                lut[nv.simplices[d][i].members] = static_cast<int>(i);
        return lut;
    };

    auto restriction = [&](int from_face, int to_face) -> RatMatrix {
        if (q == 0) return RatMatrix::identity(1);  // both are the same point
        return dilation_restriction(poly, dil.at(from_face), dil.at(to_face));
    };

    // differential from degree d to degree d+1
    auto differential = [&](int d, const std::vector<int>& off_lo, int dim_lo,
                            const std::vector<int>& off_hi, int dim_hi) -> RatMatrix {
        RatMatrix m(dim_hi, dim_lo);
        if (d < 0 || d + 1 > nv.max_degree()) return RatMatrix(dim_hi, dim_lo);
        auto lut = tuple_lookup(d);
        for (size_t ti = 0; ti < nv.simplices[d + 1].size(); ++ti) {
            const auto& simp = nv.simplices[d + 1][ti];
            if (off_hi[ti] < 0) continue;
            for (size_t drop = 0; drop < simp.members.size(); ++drop) {
                std::vector<int> sub = simp.members;
                sub.erase(sub.begin() + drop);
                int si = lut.at(sub);
                if (off_lo[si] < 0) continue;
                int sign = (drop % 2 == 0) ? 1 : -1;
                RatMatrix r = restriction(nv.simplices[d][si].intersection_face,
                                          simp.intersection_face);
                for (int i = 0; i < r.rows(); ++i)
                    for (const auto& [jj, v] : r.row(i))
                        m.add(off_hi[ti] + i, off_lo[si] + jj, sign * v);
            }
        }
        return m;
    };

    std::vector<int> off_prev, off_cur, off_next;
    int dim_prev = layout(p - 1, off_prev);
    int dim_cur = layout(p, off_cur);
    int dim_next = layout(p + 1, off_next);

    RatMatrix d_in = differential(p - 1, off_prev, dim_prev, off_cur, dim_cur);
    RatMatrix d_out = differential(p, off_cur, dim_cur, off_next, dim_next);
    if (!multiply(d_out, d_in).is_zero()) throw NotAComplex("e2_entry: d∘d != 0");

    return dim_cur - rank(d_out, backend) - rank(d_in, backend);
}

int skeleton_reduced_cohomology(const FacePoset& figure, int k, Backend backend) {
    // elements of the k-skeleton
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(figure.elements.size()); ++i)
        if (figure.elements[i].dim >= 0 && figure.elements[i].dim <= k) keep.push_back(i);
    const int nv = static_cast<int>(keep.size());
    if (nv == 0) return k == -1 ? 1 : 0;

    // chains of the order complex, by length
    std::vector<std::vector<std::vector<int>>> chains(k + 3);
    std::vector<int> stack;
    auto extend = [&](auto&& self) -> void {
        if (!stack.empty()) chains[stack.size() - 1].push_back(stack);
        if (static_cast<int>(stack.size()) == k + 3) return;
        int prev = stack.empty() ? -1 : stack.back();
        for (int next = (prev < 0 ? 0 : prev + 1); next < nv; ++next) {
            if (prev >= 0 && !figure.leq(keep[prev], keep[next])) continue;
            if (prev >= 0 &&
                figure.elements[keep[prev]].orig_vertices ==
                    figure.elements[keep[next]].orig_vertices)
                continue;
            stack.push_back(next);
            self(self);
            stack.pop_back();
        }
    };
    extend(extend);

    auto lut = [&](int d) {
        std::map<std::vector<int>, int> m;
        for (size_t i = 0; i < chains[d].size(); ++i) m[chains[d][i]] = static_cast<int>(i);
        return m;
    };
    auto boundary_matrix = [&](int d) -> RatMatrix {
        // d: C^d -> C^{d+1}
        if (d + 1 >= static_cast<int>(chains.size()))
            return RatMatrix(0, static_cast<int>(chains[d].size()));
        RatMatrix m(static_cast<int>(chains[d + 1].size()), static_cast<int>(chains[d].size()));
        auto lo = lut(d);
        for (size_t ti = 0; ti < chains[d + 1].size(); ++ti)
            for (size_t drop = 0; drop < chains[d + 1][ti].size(); ++drop) {
                std::vector<int> sub = chains[d + 1][ti];
                sub.erase(sub.begin() + drop);
                m.add(static_cast<int>(ti), lo.at(sub), drop % 2 == 0 ? 1 : -1);
            }
        return m;
    };

    int dim_k = static_cast<int>(chains[k].size());
    int rank_out = rank(boundary_matrix(k), backend);
    int rank_in;
    if (k == 0) {
        rank_in = 1;  // augmentation: the complex is nonempty
    } else {
        rank_in = rank(boundary_matrix(k - 1), backend);
    }
    return dim_k - rank_out - rank_in;
}

bool d2_rank_bound_check(const Polytope& p, Backend backend) {
    if (p.dim() < 4) throw DimensionOutOfRange("d2_rank_bound_check: need dim >= 4");
    bool flag_hypothesis = true;
    for (int f : p.faces_of_dim(3)) {
        auto prof = d_profile(p.face_polytope(f), backend).dims;
        if (prof[2] != 0)
            throw HypothesisViolated("d2_rank_bound_check: 3-face with nonzero D^2");
        if (prof[1] != 0) flag_hypothesis = false;
    }
    int dd2 = d_profile(p, backend).dims[2];
    auto nv = build_nerve(p, 3);
    int e11 = e2_entry(nv, 1, 1, backend);
    if (dd2 > e11) return false;
    if (flag_hypothesis && d2_via_flags(p, backend) != dd2) return false;
    return true;
}

}  // namespace polyhodge
