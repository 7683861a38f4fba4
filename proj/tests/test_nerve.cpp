#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyhodge/dinv.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/nerve.hpp"
#include "polyhodge/zoo.hpp"

using namespace polyhodge;

TEST_CASE("nerve construction") {
    CHECK_THROWS_AS(build_nerve(zoo("cube(2)"), 3), DimensionOutOfRange);

    auto s4 = zoo("simplex(4)");
    auto nv = build_nerve(s4, 3);
    CHECK(nv.cover_faces.size() == 5);
    CHECK(nv.simplices[0].size() == 5);
    CHECK(nv.simplices[1].size() == 10);  // all pairs of facets meet

    auto dp = zoo("dp_cuboctahedron");
    auto nvd = build_nerve(dp, 3);
    CHECK(nvd.cover_faces.size() == 28);
}

TEST_CASE("bottom row vanishes away from the skeleton degree") {
    auto dp = zoo("dp_cuboctahedron");
    auto nv = build_nerve(dp, 3);
    CHECK(e2_entry(nv, 0, 0) == 0);
    CHECK(e2_entry(nv, 1, 0) == 0);
    CHECK(e2_entry(nv, 2, 0) == 0);
}

TEST_CASE("skeleton cohomology of small figures") {
    // vertex figure of a cube is a triangle; its 1-skeleton is a circle
    auto cube = zoo("cube(3)");
    CHECK(skeleton_reduced_cohomology(vertex_figure(cube, 0), 1) == 1);

    // octahedron figure: a square, again a circle
    auto oct = zoo("crosspoly(3)");
    CHECK(skeleton_reduced_cohomology(vertex_figure(oct, 0), 1) == 1);

    // 2-skeleton of a 3-polytope figure is a 2-sphere
    auto dp = zoo("dp_cuboctahedron");
    CHECK(skeleton_reduced_cohomology(vertex_figure(dp, 0), 2) == 1);
}

TEST_CASE("top bottom-row entry matches the vertex-figure skeleton sum") {
    for (const char* name : {"dp_cuboctahedron", "cyclic(4,8)", "simplex(4)"}) {
        CAPTURE(name);
        auto p = zoo(name);
        auto nv = build_nerve(p, 3);
        int total = 0;
        for (size_t v = 0; v < p.vertices().size(); ++v)
            total += skeleton_reduced_cohomology(vertex_figure(p, static_cast<int>(v)), 2);
        CHECK(e2_entry(nv, 3, 0) == total);
    }
}

TEST_CASE("first-column entries recover D-invariants of the polytope") {
    // E2^{0,1} = D^1 for the skeleton covering
    auto c4 = zoo("cube(4)");
    auto nv = build_nerve(c4, 3);
    CHECK(e2_entry(nv, 0, 1) == d_profile(c4).dims[1]);

    auto dp = zoo("dp_cuboctahedron");
    auto nvd = build_nerve(dp, 3);
    CHECK(e2_entry(nvd, 0, 1) == d_profile(dp).dims[1]);

    // six quadrilaterals, each shared by one pair of cover faces
    CHECK(e2_entry(nvd, 1, 1) == 6);
}

TEST_CASE("rank bound check") {
    CHECK(d2_rank_bound_check(zoo("dp_cuboctahedron")));
    CHECK(d2_rank_bound_check(zoo("simplex(4)")));
    CHECK(d2_rank_bound_check(zoo("cyclic(4,8)")));
    CHECK_THROWS_AS(d2_rank_bound_check(prism(zoo("crosspoly(3)"))), HypothesisViolated);
}
