#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyhodge/d2sys.hpp"
#include "polyhodge/dinv.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/zoo.hpp"

using namespace polyhodge;

TEST_CASE("flag system shape on the double pyramid over the cuboctahedron") {
    auto p = zoo("dp_cuboctahedron");
    auto sys = build_flag_system(p);

    // row counts per family match the flag counts
    int flags04 = 0, flags23 = 0, flags02 = 0;
    for (int F : p.faces_of_dim(4)) flags04 += static_cast<int>(p.face(F).vertex_set.size());
    for (int eps : p.faces_of_dim(2)) {
        flags23 += static_cast<int>(p.superfaces_of(eps, 3).size());
        flags02 += static_cast<int>(p.face(eps).vertex_set.size());
    }
    CHECK(sys.rows_family1 == flags04);
    CHECK(sys.rows_family2 == flags23 * (p.dim() + 1));
    CHECK(sys.rows_family3 == flags02);

    // every (2,4)-flag has exactly two bracketing 3-faces (recorded order)
    for (int eps : p.faces_of_dim(2))
        for (int F : p.superfaces_of(eps, 4)) {
            auto it = sys.between_pairs.find({eps, F});
            REQUIRE(it != sys.between_pairs.end());
            CHECK(it->second.first != it->second.second);
        }
}

TEST_CASE("flag kernel equals direct D^2") {
    auto dp = zoo("dp_cuboctahedron");
    CHECK(d2_via_flags(dp) == 1);
    CHECK(d_profile(dp).dims[2] == 1);

    CHECK(d2_via_flags(zoo("simplex(4)")) == 0);

    auto dpo = double_pyramid(zoo("crosspoly(3)"));
    CHECK(d2_via_flags(dpo) == d_profile(dpo).dims[2]);

    auto dpp = double_pyramid(pyramid(zoo("cube(2)")));
    CHECK(d2_via_flags(dpp) == d_profile(dpp).dims[2]);

    auto pp = pyramid(pyramid(zoo("cube(2)")));
    CHECK(d2_via_flags(pp) == d_profile(pp).dims[2]);

    // five-dimensional input exercises proper (0,4)-flags
    auto dd = double_pyramid(zoo("dp_cuboctahedron"));
    CHECK(d2_via_flags(dd) == d_profile(dd).dims[2]);
}

TEST_CASE("three-dimensional input answers through the direct route") {
    CHECK(d2_via_flags(zoo("bipyramid_mgon(5)")) == 3);
}

TEST_CASE("hypothesis violation is detected") {
    // prism over the 3-cube has cube 3-faces with D^1 = 2
    auto bad = prism(zoo("cube(3)"));
    CHECK_THROWS_AS(build_flag_system(bad), HypothesisViolated);
    CHECK_THROWS_AS(d2_via_flags(bad), HypothesisViolated);
}

TEST_CASE("forcing triangle flags to zero keeps the kernel dimension") {
    for (const char* name : {"dp_cuboctahedron", "simplex(4)"}) {
        auto p = zoo(name);
        auto sys = build_flag_system(p);
        int base_dim = static_cast<int>(kernel_basis(sys.equations).size());

        RatMatrix extended(sys.equations.rows() + static_cast<int>(sys.vars.size()),
                           static_cast<int>(sys.vars.size()));
        for (int r = 0; r < sys.equations.rows(); ++r)
            extended.row_mut(r) = sys.equations.row(r);
        int row = sys.equations.rows();
        for (size_t v = 0; v < sys.vars.size(); ++v) {
            if (p.face(sys.vars[v].two_face).vertex_set.size() == 3)
                extended.set(row, static_cast<int>(v), 1);
            ++row;
        }
        CHECK(static_cast<int>(kernel_basis(extended).size()) == base_dim);
    }
}

TEST_CASE("alternating sign element") {
    CHECK(sign_element_check(zoo("dp_cuboctahedron")));
    CHECK(sign_element_check(zoo("simplex(4)")));  // vacuous: no quadrilaterals

    // the single square of dp(pyr(square)) leaves vertices with one incident
    // quadrilateral, so the alternating pattern cannot close up
    auto forced = double_pyramid(pyramid(zoo("cube(2)")));
    CHECK(!sign_element_check(forced));
}

TEST_CASE("cleaning basics") {
    auto s4 = zoo("simplex(4)");
    auto st = clean(s4);
    CHECK(st.everything_clean);

    auto dp = zoo("dp_cuboctahedron");
    auto std_ = clean(dp);
    CHECK(!std_.everything_clean);
    // only triangles get cleaned among 2-faces
    for (int f : std_.clean_2faces) CHECK(dp.face(f).vertex_set.size() == 3);
    int quads = 0;
    for (int f : dp.faces_of_dim(2))
        if (dp.face(f).vertex_set.size() == 4) ++quads;
    CHECK(quads == 6);
    CHECK(std_.clean_2faces.size() + quads == dp.faces_of_dim(2).size());
    // the apexes sit in no quadrilateral and get cleaned; the twelve base
    // vertices each sit in two and stall
    CHECK(std_.clean_vertices.size() == 2);
}

TEST_CASE("cleaning is confluent") {
    std::mt19937 rng(31415);
    for (const char* name : {"dp_cuboctahedron", "simplex(4)", "cube(3)"}) {
        auto p = zoo(name);
        auto reference = clean(p);
        for (int t = 0; t < 30; ++t) {
            auto st = clean(p, rng);
            CHECK(st.clean_vertices == reference.clean_vertices);
            CHECK(st.clean_2faces == reference.clean_2faces);
        }
    }
}

TEST_CASE("certification") {
    auto dp = zoo("dp_cuboctahedron");
    auto v = certify_vanishing(dp);
    CHECK(!v.vanishes_by_theorem);
    CHECK(v.reason == "cleaning stalls");
    CHECK(d_profile(dp).dims[2] == 1);  // the stall is genuine

    CHECK(certify_vanishing(zoo("simplex(4)")).vanishes_by_theorem);

    auto pp = pyramid(pyramid(zoo("cube(2)")));
    auto vp = certify_vanishing(pp);
    CHECK(vp.vanishes_by_theorem);
    CHECK(d_profile(pp).dims[2] == 0);

    auto prism3 = zoo("prism_triangle");
    CHECK(!certify_vanishing(prism3).vanishes_by_theorem);
}

TEST_CASE("certificate soundness on derived instances") {
    std::mt19937 rng(999);
    std::vector<Polytope> pool;
    pool.push_back(pyramid(zoo("simplex(3)")));
    pool.push_back(pyramid(pyramid(zoo("mgon(4)"))));
    pool.push_back(pyramid(pyramid(zoo("mgon(5)"))));
    pool.push_back(double_pyramid(zoo("simplex(3)")));
    pool.push_back(zoo("cyclic(4,8)"));
    pool.push_back(double_pyramid(zoo("icosahedron")));
    for (const auto& p : pool) {
        auto v = certify_vanishing(p);
        if (v.vanishes_by_theorem) CHECK(d_profile(p).dims[2] == 0);
    }
}
