#include "polyhodge/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "polyhodge/errors.hpp"
#include "polyhodge/linalg.hpp"

namespace polyhodge {

bool FVector::euler_ok() const {
    long acc = 0;
    int sign = -1;  // j = -1 term
    for (long c : counts) {
        acc += sign * c;
        sign = -sign;
    }
    return acc == 0;
}

namespace {

// ---------------------------------------------------------------------------
// Double description: extreme rays of { z : row_i . z >= 0 }.
// Assumes the rows span the space (pointed cone).
// ---------------------------------------------------------------------------

RatVec primitive(const RatVec& v) {
    Integer common_den = 1;
    for (const auto& x : v) common_den = lcm(common_den, x.get_den());
    std::vector<Integer> ints(v.size());
    Integer g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (common_den / v[i].get_den());
        g = gcd(g, ints[i]);
    }
    RatVec out(v.size(), 0);
    if (g == 0) return out;
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

struct Ray {
    RatVec z;
    std::vector<char> tight;  // indexed by row; meaningful for processed rows
};

std::vector<Ray> dd_extreme_rays(const std::vector<RatVec>& rows) {
    const int dim = static_cast<int>(rows[0].size());
    const int nrows = static_cast<int>(rows.size());

    std::vector<int> init = greedy_independent_subset(rows);
    if (static_cast<int>(init.size()) != dim)
        throw Error("double description: constraint rows do not span the space");

    std::vector<char> processed(nrows, 0);
    for (int i : init) processed[i] = 1;

    RatMatrix base(dim, dim);
    for (int k = 0; k < dim; ++k)
        for (int j = 0; j < dim; ++j) base.set(k, j, rows[init[k]][j]);

    std::vector<Ray> rays;
    for (int k = 0; k < dim; ++k) {
        RatVec e(dim, 0);
        e[k] = 1;
        auto x = solve(base, e, Backend::Serial);
        assert(x.has_value());
        Ray r;
        r.z = primitive(*x);
        r.tight.assign(nrows, 0);
        for (int j = 0; j < dim; ++j)
            if (j != k) r.tight[init[j]] = 1;
        rays.push_back(std::move(r));
    }

    auto subset_tight = [&](const std::vector<char>& s, const Ray& q) {
        for (int i = 0; i < nrows; ++i)
            if (s[i] && !q.tight[i]) return false;
        return true;
    };

    for (int a = 0; a < nrows; ++a) {
        if (processed[a]) continue;
        std::vector<Rational> val(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) val[r] = dot(rows[a], rays[r].z);

        bool any_negative = false;
        for (const auto& v : val)
            if (v < 0) any_negative = true;

        std::vector<Ray> next;
        for (size_t r = 0; r < rays.size(); ++r) {
            if (val[r] >= 0) {
                Ray kept = rays[r];
                kept.tight[a] = (val[r] == 0);
                next.push_back(std::move(kept));
            }
        }
        if (any_negative) {
            for (size_t rp = 0; rp < rays.size(); ++rp) {
                if (val[rp] <= 0) continue;
                for (size_t rm = 0; rm < rays.size(); ++rm) {
                    if (val[rm] >= 0) continue;
                    std::vector<char> common(nrows, 0);
                    for (int i = 0; i < nrows; ++i)
                        common[i] = rays[rp].tight[i] && rays[rm].tight[i];
                    bool adjacent = true;
                    for (size_t q = 0; q < rays.size() && adjacent; ++q)
                        if (q != rp && q != rm && subset_tight(common, rays[q])) adjacent = false;
                    if (!adjacent) continue;

                    Ray fresh;
                    fresh.z.resize(dim);
                    for (int j = 0; j < dim; ++j)
                        fresh.z[j] = val[rp] * rays[rm].z[j] - val[rm] * rays[rp].z[j];
                    fresh.z = primitive(fresh.z);
                    fresh.tight = common;
                    fresh.tight[a] = 1;
                    next.push_back(std::move(fresh));
                }
            }
        }
        processed[a] = 1;
        rays.swap(next);
    }

    // positive scaling made representatives unique; drop exact duplicates
    std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.z < b.z; });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [](const Ray& a, const Ray& b) { return a.z == b.z; }),
               rays.end());
    return rays;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Polytope Polytope::empty() {
    Polytope p;
    p.dim_ = -1;
    p.faces_ = {Face{{}, -1}};
    p.name_ = "empty";
    return p;
}

Polytope Polytope::from_vertices(std::vector<RatVec> points, std::string name) {
    if (points.empty()) throw EmptyInput("from_vertices: no points");
    for (const auto& pt : points)
        if (pt.size() != points[0].size())
            throw DimensionMismatch("from_vertices: inconsistent coordinate lengths");

    // drop exact duplicates, keeping first occurrences
    {
        std::set<RatVec> seen;
        std::vector<RatVec> unique_pts;
        for (auto& pt : points)
            if (seen.insert(pt).second) unique_pts.push_back(pt);
        points.swap(unique_pts);
    }

    // affine hull basis: directions from the lex-smallest point, scanned in
    // lexicographic order
    const RatVec origin = *std::min_element(points.begin(), points.end());
    std::vector<RatVec> sorted_pts = points;
    std::sort(sorted_pts.begin(), sorted_pts.end());
    std::vector<RatVec> dirs;
    for (const auto& pt : sorted_pts) dirs.push_back(pt - origin);
    std::vector<RatVec> basis;
    for (int idx : greedy_independent_subset(dirs)) basis.push_back(dirs[idx]);
    const int d = static_cast<int>(basis.size());

    // full-dimensional input keeps its coordinates (lattice data survives);
    // lower-dimensional input is re-expressed in the affine-hull basis
    std::vector<RatVec> coords;
    if (d == static_cast<int>(points[0].size())) {
        coords = points;
    } else {
        coords.resize(points.size());
        for (size_t i = 0; i < points.size(); ++i) {
            auto c = express_in_columns(basis, points[i] - origin);
            assert(c.has_value());
            coords[i] = *c;
        }
    }

    Polytope p;
    p.name_ = std::move(name);
    p.dim_ = d;

    if (d == 0) {
        p.vertices_ = {RatVec{}};
        p.faces_ = {Face{{}, -1}, Face{{0}, 0}};
        p.barycenter_ = RatVec{};
        return p;
    }

    RatVec bc(d, 0);
    for (const auto& c : coords)
        for (int j = 0; j < d; ++j) bc[j] += c[j];
    for (int j = 0; j < d; ++j) bc[j] /= static_cast<int>(coords.size());

    // facets of conv(coords) = extreme rays of the homogenized polar cone
    std::vector<RatVec> rows;
    for (const auto& c : coords) {
        RatVec row(d + 1);
        row[0] = 1;
        for (int j = 0; j < d; ++j) row[j + 1] = -(c[j] - bc[j]);
        rows.push_back(std::move(row));
    }
    auto rays = dd_extreme_rays(rows);

    std::vector<RatVec> normals;
    std::vector<std::vector<int>> tight_sets;
    for (const auto& ray : rays) {
        if (ray.z[0] <= 0) throw Error("hull: unbounded polar ray (inconsistent input)");
        RatVec u(d);
        for (int j = 0; j < d; ++j) u[j] = ray.z[j + 1] / ray.z[0];
        std::vector<int> tight;
        for (size_t i = 0; i < coords.size(); ++i) {
            Rational s = 0;
            for (int j = 0; j < d; ++j) s += u[j] * (coords[i][j] - bc[j]);
            assert(s <= 1);
            if (s == 1) tight.push_back(static_cast<int>(i));
        }
        normals.push_back(std::move(u));
        tight_sets.push_back(std::move(tight));
    }

    // a point is extreme iff the facets through it pin down a 0-dim face
    std::vector<int> extreme;
    for (size_t i = 0; i < coords.size(); ++i) {
        std::vector<RatVec> through;
        for (size_t j = 0; j < normals.size(); ++j)
            if (std::binary_search(tight_sets[j].begin(), tight_sets[j].end(),
                                   static_cast<int>(i)))
                through.push_back(normals[j]);
        if (rank_of_vectors(through) == d) extreme.push_back(static_cast<int>(i));
    }
    if (extreme.size() != points.size()) {
        std::vector<RatVec> kept;
        for (int i : extreme) kept.push_back(points[i]);
        return from_vertices(std::move(kept), std::move(p.name_));
    }

    p.vertices_ = std::move(coords);
    p.barycenter_ = std::move(bc);

    // deterministic facet order
    {
        std::vector<int> order(normals.size());
        for (size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return tight_sets[a] < tight_sets[b]; });
        for (int j : order) {
            p.facet_normals_.push_back(normals[j]);
            p.facet_tight_sets_.push_back(tight_sets[j]);
        }
    }

    // face set: close the facet vertex sets under intersection
    std::set<std::vector<int>> face_sets;
    std::vector<std::vector<int>> queue;
    std::vector<int> all(p.vertices_.size());
    for (size_t i = 0; i < p.vertices_.size(); ++i) all[i] = static_cast<int>(i);
    face_sets.insert(all);
    for (const auto& t : p.facet_tight_sets_)
        if (face_sets.insert(t).second) queue.push_back(t);
    while (!queue.empty()) {
        auto f = std::move(queue.back());
        queue.pop_back();
        for (const auto& t : p.facet_tight_sets_) {
            auto h = intersect_sorted(f, t);
            if (face_sets.insert(h).second) queue.push_back(h);
        }
    }
    face_sets.insert({});

    for (const auto& vs : face_sets) {
        Face f;
        f.vertex_set = vs;
        if (vs.empty()) {
            f.dim = -1;
        } else {
            std::vector<RatVec> diffs;
            for (size_t k = 1; k < vs.size(); ++k)
                diffs.push_back(p.vertices_[vs[k]] - p.vertices_[vs[0]]);
            f.dim = rank_of_vectors(diffs);
        }
        p.faces_.push_back(std::move(f));
    }
    std::sort(p.faces_.begin(), p.faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_set < b.vertex_set;
    });
    return p;
}

std::vector<int> Polytope::faces_of_dim(int d) const {
    std::vector<int> out;
    for (int i = 0; i < face_count(); ++i)
        if (faces_[i].dim == d) out.push_back(i);
    return out;
}

int Polytope::face_index(const std::vector<int>& vertex_set) const {
    for (int i = 0; i < face_count(); ++i)
        if (faces_[i].vertex_set == vertex_set) return i;
    return -1;
}

int Polytope::top_face() const { return face_count() - 1; }
int Polytope::empty_face() const { return 0; }

bool Polytope::face_contains(int big, int small) const {
    return is_subset(faces_[small].vertex_set, faces_[big].vertex_set);
}

std::vector<int> Polytope::subfaces_of(int face, int d) const {
    std::vector<int> out;
    for (int i = 0; i < face_count(); ++i)
        if (faces_[i].dim == d && face_contains(face, i)) out.push_back(i);
    return out;
}

std::vector<int> Polytope::superfaces_of(int face, int d) const {
    std::vector<int> out;
    for (int i = 0; i < face_count(); ++i)
        if (faces_[i].dim == d && face_contains(i, face)) out.push_back(i);
    return out;
}

std::vector<int> Polytope::polygon_cycle(int face) const {
    const Face& f = faces_[face];
    if (f.dim != 2) throw DimensionMismatch("polygon_cycle: face is not 2-dimensional");
    std::map<int, std::vector<int>> nbr;
    for (int e : subfaces_of(face, 1)) {
        const auto& vs = faces_[e].vertex_set;
        nbr[vs[0]].push_back(vs[1]);
        nbr[vs[1]].push_back(vs[0]);
    }
    for (auto& [v, ns] : nbr) {
        assert(ns.size() == 2);
        std::sort(ns.begin(), ns.end());
    }
    std::vector<int> cycle;
    int start = f.vertex_set.front();
    int prev = start;
    int cur = nbr[start][0];
    cycle.push_back(start);
    while (cur != start) {
        cycle.push_back(cur);
        const auto& ns = nbr[cur];
        int nxt = (ns[0] == prev) ? ns[1] : ns[0];
        prev = cur;
        cur = nxt;
    }
    assert(cycle.size() == f.vertex_set.size());
    return cycle;
}

FVector Polytope::f_vector() const {
    FVector fv;
    fv.counts.assign(dim_ + 2, 0);
    for (const auto& f : faces_) fv.counts[f.dim + 1] += 1;
    return fv;
}

bool Polytope::is_simple() const {
    if (dim_ <= 0) return true;
    for (size_t v = 0; v < vertices_.size(); ++v) {
        int count = 0;
        for (const auto& t : facet_tight_sets_)
            if (std::binary_search(t.begin(), t.end(), static_cast<int>(v))) ++count;
        if (count != dim_) return false;
    }
    return true;
}

bool Polytope::is_simplicial() const {
    for (const auto& t : facet_tight_sets_)
        if (static_cast<int>(t.size()) != dim_) return false;
    return true;
}

Polytope Polytope::face_polytope(int face) const {
    const Face& f = faces_[face];
    if (f.dim < 0) return empty();
    std::vector<RatVec> pts;
    for (int v : f.vertex_set) pts.push_back(vertices_[v]);
    return from_vertices(std::move(pts));
}

Polytope polar_dual(const Polytope& p) {
    if (p.is_empty()) throw DimensionMismatch("polar_dual: empty polytope");
    if (p.dim() == 0) return p;  // the point in Q^0 is its own polar
    return Polytope::from_vertices(p.facet_normals(), "dual(" + p.name() + ")");
}

namespace {

std::vector<RatVec> embed_at_height(const Polytope& p, const Rational& h) {
    std::vector<RatVec> out;
    for (const auto& v : p.vertices()) {
        RatVec w = v;
        w.push_back(h);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

Polytope pyramid(const Polytope& p) {
    auto pts = embed_at_height(p, 0);
    RatVec apex = p.barycenter();  // above an interior point
    apex.push_back(1);
    pts.push_back(std::move(apex));
    return Polytope::from_vertices(std::move(pts), "pyr(" + p.name() + ")");
}

Polytope double_pyramid(const Polytope& p) {
    auto pts = embed_at_height(p, 0);
    RatVec north = p.barycenter();  // apexes above/below an interior point
    RatVec south = p.barycenter();
    north.push_back(1);
    south.push_back(-1);
    pts.push_back(std::move(north));
    pts.push_back(std::move(south));
    return Polytope::from_vertices(std::move(pts), "dp(" + p.name() + ")");
}

Polytope prism(const Polytope& p) {
    auto pts = embed_at_height(p, 0);
    auto top = embed_at_height(p, 1);
    pts.insert(pts.end(), top.begin(), top.end());
    return Polytope::from_vertices(std::move(pts), "prism(" + p.name() + ")");
}

Polytope product(const Polytope& a, const Polytope& b) {
    std::vector<RatVec> pts;
    for (const auto& u : a.vertices())
        for (const auto& v : b.vertices()) {
            RatVec w = u;
            w.insert(w.end(), v.begin(), v.end());
            pts.push_back(std::move(w));
        }
    return Polytope::from_vertices(std::move(pts), a.name() + "x" + b.name());
}

bool is_pyramid_3face(const Polytope& p, int face) {
    if (p.face(face).dim != 3) throw DimensionMismatch("is_pyramid_3face: need a 3-face");
    size_t total = p.face(face).vertex_set.size();
    for (int sub : p.subfaces_of(face, 2))
        if (p.face(sub).vertex_set.size() == total - 1) return true;
    return false;
}

bool FacePoset::leq(int a, int b) const {
    return is_subset(elements[a].orig_vertices, elements[b].orig_vertices);
}

FacePoset vertex_figure(const Polytope& p, int vertex) {
    FacePoset poset;
    for (const auto& f : p.faces()) {
        if (f.dim < 1) continue;
        if (!std::binary_search(f.vertex_set.begin(), f.vertex_set.end(), vertex)) continue;
        poset.elements.push_back({f.dim - 1, f.vertex_set});
    }
    // p.faces() is sorted by (dim, lex), which the poset inherits
    return poset;
}

}  // namespace polyhodge
