#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "polyhodge/errors.hpp"
#include "polyhodge/polytope.hpp"
#include "polyhodge/zoo.hpp"

using namespace polyhodge;

namespace {

std::vector<long> fcounts(const Polytope& p) { return p.f_vector().counts; }

// face-lattice isomorphism via canonical relabeling: map each vertex to the
// sorted multiset of dims of faces through it is too weak; instead compare
// the two lattices through facet-incidence backtracking on small cases, or
// simply compare f-vectors plus the sorted list of per-face (dim, #vertices,
// #facets-through) signatures. Sufficient for the regression sizes used here.
std::multiset<std::tuple<int, size_t, size_t>> face_signature(const Polytope& p) {
    std::multiset<std::tuple<int, size_t, size_t>> sig;
    for (int i = 0; i < p.face_count(); ++i) {
        size_t nsup = p.superfaces_of(i, p.face(i).dim + 1).size();
        sig.insert({p.face(i).dim, p.face(i).vertex_set.size(), nsup});
    }
    return sig;
}

}  // namespace

TEST_CASE("unit square combinatorics") {
    auto p = Polytope::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(p.dim() == 2);
    CHECK(fcounts(p) == std::vector<long>{1, 4, 4, 1});
    CHECK(p.f_vector().euler_ok());
}

TEST_CASE("cuboctahedron f-vector") {
    auto p = zoo("cuboctahedron");
    CHECK(p.dim() == 3);
    CHECK(fcounts(p) == std::vector<long>{1, 12, 24, 14, 1});
    // 8 triangles and 6 squares
    int tri = 0, quad = 0;
    for (int f : p.faces_of_dim(2))
        (p.face(f).vertex_set.size() == 3 ? tri : quad)++;
    CHECK(tri == 8);
    CHECK(quad == 6);
}

TEST_CASE("single point and empty input") {
    auto p = Polytope::from_vertices({{1, 2, 3}});
    CHECK(p.dim() == 0);
    CHECK(p.face_count() == 2);
    CHECK_THROWS_AS(Polytope::from_vertices({}), EmptyInput);
}

TEST_CASE("affine-hull reduction and redundant points") {
    // a segment inside Q^3, with its midpoint listed
    auto p = Polytope::from_vertices({{0, 0, 0}, {2, 2, 2}, {1, 1, 1}});
    CHECK(p.dim() == 1);
    CHECK(p.vertices().size() == 2);
    CHECK(fcounts(p) == std::vector<long>{1, 2, 1});

    // planar square floating in Q^3
    auto q = Polytope::from_vertices({{0, 0, 5}, {1, 0, 5}, {1, 1, 5}, {0, 1, 5}});
    CHECK(q.dim() == 2);
    CHECK(fcounts(q) == std::vector<long>{1, 4, 4, 1});
}

TEST_CASE("polar dual reverses the f-vector") {
    auto cube = zoo("cube(3)");
    auto dual = polar_dual(cube);
    CHECK(fcounts(dual) == std::vector<long>{1, 6, 12, 8, 1});

    auto simplex = zoo("simplex(3)");
    CHECK(fcounts(polar_dual(simplex)) == fcounts(simplex));

    auto co = zoo("cuboctahedron");
    CHECK(fcounts(polar_dual(co)) == std::vector<long>{1, 14, 24, 12, 1});
}

TEST_CASE("polar dual is an involution on the face lattice") {
    for (const char* name : {"cube(3)", "cuboctahedron", "mgon(5)", "simplex(4)"}) {
        auto p = zoo(name);
        auto dd = polar_dual(polar_dual(p));
        CHECK(fcounts(dd) == fcounts(p));
        CHECK(face_signature(dd) == face_signature(p));
    }
}

TEST_CASE("every face is the intersection of the facets containing it") {
    for (const char* name : {"cube(3)", "cuboctahedron", "bipyramid_mgon(5)"}) {
        auto p = zoo(name);
        for (int i = 0; i < p.face_count(); ++i) {
            const auto& f = p.face(i);
            if (f.dim >= p.dim() || f.dim < 0) continue;
            std::vector<int> acc = p.face(p.top_face()).vertex_set;
            for (const auto& t : p.facet_tight_sets()) {
                if (!std::includes(t.begin(), t.end(), f.vertex_set.begin(), f.vertex_set.end()))
                    continue;
                std::vector<int> next;
                std::set_intersection(acc.begin(), acc.end(), t.begin(), t.end(),
                                      std::back_inserter(next));
                acc = next;
            }
            CHECK(acc == f.vertex_set);
        }
    }
}

TEST_CASE("pyramids, double pyramids, prisms") {
    auto square = zoo("cube(2)");
    auto oct = double_pyramid(square);
    CHECK(fcounts(oct) == std::vector<long>{1, 6, 12, 8, 1});

    auto p5 = zoo("pyramid_mgon(5)");
    CHECK(p5.f_vector().f(0) == 6);

    auto dp = zoo("dp_cuboctahedron");
    CHECK(dp.dim() == 4);
    CHECK(dp.f_vector().f(0) == 14);
    // 16 tetrahedra and 12 square pyramids as facets
    int tets = 0, pyrs = 0;
    for (int f : dp.faces_of_dim(3)) {
        if (dp.face(f).vertex_set.size() == 4) ++tets;
        if (dp.face(f).vertex_set.size() == 5) ++pyrs;
        CHECK(is_pyramid_3face(dp, f));
    }
    CHECK(tets == 16);
    CHECK(pyrs == 12);
}

TEST_CASE("double pyramid face structure") {
    // proper faces of dp(base): proper faces of the base, plus a pyramid
    // over each proper base face (the empty one included) for both apexes
    for (const char* name : {"mgon(4)", "mgon(6)", "cuboctahedron"}) {
        auto base = zoo(name);
        auto dp = double_pyramid(base);
        CHECK(dp.f_vector().f(0) == base.f_vector().f(0) + 2);
        for (int d = 0; d <= base.dim(); ++d) {
            long expected = (d < base.dim() ? base.f_vector().f(d) : 0)
                            + 2 * base.f_vector().f(d - 1);
            CHECK(dp.f_vector().f(d) == expected);
        }
    }
}

TEST_CASE("pyramid 3-face detection") {
    auto tet = zoo("simplex(3)");
    CHECK(is_pyramid_3face(tet, tet.top_face()));

    auto sqpyr = pyramid(zoo("cube(2)"));
    CHECK(is_pyramid_3face(sqpyr, sqpyr.top_face()));

    auto prism3 = zoo("prism_triangle");
    CHECK(!is_pyramid_3face(prism3, prism3.top_face()));

    CHECK_THROWS_AS(is_pyramid_3face(tet, tet.empty_face()), DimensionMismatch);
}

TEST_CASE("vertex figures") {
    auto cube = zoo("cube(3)");
    auto fig = vertex_figure(cube, 0);
    std::map<int, int> count;
    for (const auto& e : fig.elements) count[e.dim]++;
    CHECK(count[0] == 3);  // edges through the vertex
    CHECK(count[1] == 3);  // facets through the vertex
    CHECK(count[2] == 1);  // the cube itself

    auto oct = zoo("crosspoly(3)");
    auto figo = vertex_figure(oct, 0);
    std::map<int, int> co;
    for (const auto& e : figo.elements) co[e.dim]++;
    CHECK(co[0] == 4);
    CHECK(co[1] == 4);

    auto cubo = zoo("cuboctahedron");
    auto figc = vertex_figure(cubo, 0);
    std::map<int, int> cc;
    for (const auto& e : figc.elements) cc[e.dim]++;
    CHECK(cc[0] == 4);  // quadrilateral figure: 4 vertices, 4 edges
    CHECK(cc[1] == 4);
}

TEST_CASE("polygon cycle") {
    auto sq = zoo("cube(2)");
    auto cyc = sq.polygon_cycle(sq.top_face());
    CHECK(cyc.size() == 4);
    CHECK(cyc[0] == 0);
    // consecutive entries share an edge
    for (size_t i = 0; i < 4; ++i) {
        std::vector<int> e{cyc[i], cyc[(i + 1) % 4]};
        std::sort(e.begin(), e.end());
        CHECK(sq.face_index(e) >= 0);
    }
}

TEST_CASE("icosahedron model is combinatorially icosahedral") {
    auto ico = zoo("icosahedron");
    CHECK(fcounts(ico) == std::vector<long>{1, 12, 30, 20, 1});
    CHECK(ico.is_simplicial());
    for (size_t v = 0; v < ico.vertices().size(); ++v) {
        auto fig = vertex_figure(ico, static_cast<int>(v));
        int edges_through = 0;
        for (const auto& e : fig.elements)
            if (e.dim == 0) ++edges_through;
        CHECK(edges_through == 5);
    }
}

TEST_CASE("cyclic polytope is neighborly and simplicial") {
    auto c = zoo("cyclic(4,8)");
    CHECK(c.dim() == 4);
    CHECK(c.f_vector().f(0) == 8);
    CHECK(c.f_vector().f(1) == 28);  // neighborly: every pair is an edge
    CHECK(c.f_vector().f(3) == 20);
    CHECK(c.is_simplicial());
    CHECK(c.f_vector().euler_ok());
}

TEST_CASE("products are simple when the factors are") {
    auto pr = product(zoo("cube(2)"), zoo("prism_triangle"));
    CHECK(pr.dim() == 5);
    CHECK(pr.f_vector().f(0) == 24);
    CHECK(pr.is_simple());
    CHECK(pr.f_vector().euler_ok());
}

TEST_CASE("euler relation across the zoo") {
    for (const char* name : {"simplex(2)", "simplex(4)", "cube(3)", "crosspoly(4)", "mgon(7)",
                             "bipyramid_mgon(6)", "icosahedron", "cuboctahedron",
                             "dp_cuboctahedron", "prism_triangle", "cyclic(4,8)"}) {
        CHECK(zoo(name).f_vector().euler_ok());
    }
}

TEST_CASE("hull output is deterministic and order-insensitive for ranks") {
    std::mt19937 rng(42);
    auto base = zoo("cuboctahedron");
    auto pts = base.vertices();
    std::shuffle(pts.begin(), pts.end(), rng);
    auto shuffled = Polytope::from_vertices(pts);
    CHECK(fcounts(shuffled) == fcounts(base));
}
