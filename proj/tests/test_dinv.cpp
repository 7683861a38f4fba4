#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyhodge/dinv.hpp"
#include "polyhodge/linalg.hpp"
#include "polyhodge/zoo.hpp"

using namespace polyhodge;

namespace {

Polytope random_affine_image(const Polytope& p, std::mt19937& rng) {
    const int n = p.dim();
    std::uniform_int_distribution<int> entry(-2, 2);
    std::vector<RatVec> mat;
    do {
        mat.assign(n, RatVec(n, 0));
        for (auto& row : mat)
            for (auto& x : row) x = entry(rng);
    } while (rank_of_vectors(mat) != n);
    RatVec shift(n);
    for (auto& x : shift) x = entry(rng);

    std::vector<RatVec> pts;
    for (const auto& v : p.vertices()) {
        RatVec w = shift;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += mat[i][j] * v[j];
        pts.push_back(std::move(w));
    }
    return Polytope::from_vertices(std::move(pts));
}

}  // namespace

TEST_CASE("headline profiles") {
    CHECK(d_profile(zoo("icosahedron")).dims == std::vector<int>{0, 0, 8, 0});
    CHECK(d_profile(zoo("cuboctahedron")).dims == std::vector<int>{0, 1, 3, 0});
    CHECK(d_profile(zoo("dp_cuboctahedron")).dims == std::vector<int>{0, 0, 1, 4, 0});
}

TEST_CASE("pyramids over polygons have trivial profiles") {
    for (int m = 4; m <= 8; ++m) {
        auto prof = d_profile(zoo("pyramid_mgon(" + std::to_string(m) + ")")).dims;
        CHECK(prof == std::vector<int>{0, 0, 0, 0});
    }
}

TEST_CASE("double pyramids over polygons") {
    for (int m = 4; m <= 8; ++m) {
        auto prof = d_profile(zoo("bipyramid_mgon(" + std::to_string(m) + ")")).dims;
        CHECK(prof == std::vector<int>{0, 0, m - 2, 0});
    }
}

TEST_CASE("polygons") {
    for (int m = 3; m <= 10; ++m)
        CHECK(d_profile(zoo("mgon(" + std::to_string(m) + ")")).dims ==
              std::vector<int>{0, m - 3, 0});
}

TEST_CASE("point polytope") {
    CHECK(d_profile(Polytope::from_vertices({{0, 0}})).dims == std::vector<int>{1});
}

TEST_CASE("duality route agrees everywhere") {
    for (const char* name :
         {"simplex(2)", "simplex(3)", "simplex(4)", "cube(2)", "cube(3)", "crosspoly(3)",
          "mgon(5)", "mgon(7)", "pyramid_mgon(5)", "bipyramid_mgon(6)", "icosahedron",
          "cuboctahedron", "prism_triangle", "cyclic(4,8)", "dp_cuboctahedron"}) {
        auto p = zoo(name);
        CAPTURE(name);
        CHECK(d_profile(p).dims == d_profile_dual_route(p).dims);
    }
}

TEST_CASE("cube and octahedron pair up") {
    CHECK(d_profile(zoo("cube(3)")).dims == std::vector<int>{0, 2, 0, 0});
    CHECK(d_profile(zoo("crosspoly(3)")).dims == std::vector<int>{0, 0, 2, 0});
}

TEST_CASE("profiles of simplices vanish") {
    for (int n = 2; n <= 4; ++n) {
        auto prof = d_profile(zoo("simplex(" + std::to_string(n) + ")")).dims;
        for (int d : prof) CHECK(d == 0);
    }
}

TEST_CASE("minkowski spaces") {
    CHECK(minkowski_space(zoo("cube(2)")).dimension() == 2);
    CHECK(minkowski_space(zoo("icosahedron")).dimension() == 1);  // triangles only
    CHECK(minkowski_space(zoo("cuboctahedron")).dimension() == 2);
}

TEST_CASE("cuboctahedron splits into two tetrahedra") {
    // the canonical kernel basis lands on the indicator vectors of the two
    // tetrahedron summands: complementary 0/1 dilation patterns
    auto space = minkowski_space(zoo("cuboctahedron"));
    REQUIRE(space.dimension() == 2);
    int ones0 = 0;
    for (size_t e = 0; e < space.edges.size(); ++e) {
        bool a = space.basis[0][e] == 1;
        bool b = space.basis[1][e] == 1;
        CHECK((a || b));
        CHECK(!(a && b));
        CHECK((space.basis[0][e] == 0 || space.basis[0][e] == 1));
        if (a) ++ones0;
    }
    CHECK(ones0 == 12);
}

TEST_CASE("minkowski dimension is dim D^1 plus one, all-ones included") {
    for (const char* name : {"cube(2)", "cube(3)", "mgon(6)", "cuboctahedron", "icosahedron",
                             "prism_triangle", "dp_cuboctahedron", "bipyramid_mgon(5)"}) {
        auto p = zoo(name);
        CAPTURE(name);
        auto space = minkowski_space(p);
        CHECK(space.dimension() == d_profile(p).dims[1] + 1);
        RatVec ones(space.edges.size(), 1);
        CHECK(express_in_columns(space.basis, ones).has_value());
    }
}

TEST_CASE("closed forms: icosahedron and cuboctahedron") {
    bool found = false;
    for (const auto& c : closed_form_checks(zoo("icosahedron")))
        if (c.name.find("simplicial") != std::string::npos) {
            found = true;
            CHECK(c.lhs == 8);
            CHECK(c.pass);
        }
    CHECK(found);

    for (const auto& c : closed_form_checks(zoo("cuboctahedron")))
        if (c.name.find("f_2 - f_0") != std::string::npos) {
            CHECK(c.lhs == 2);
            CHECK(c.pass);
        }
}

TEST_CASE("closed forms: the simple-polytope sum needs the empty face term") {
    auto checks = closed_form_checks(zoo("cube(3)"));
    bool with_pass = false, without_pass = true;
    for (const auto& c : checks) {
        if (c.name.find("included") != std::string::npos) with_pass = c.pass;
        if (c.name.find("omitted") != std::string::npos) without_pass = c.pass;
    }
    CHECK(with_pass);
    CHECK(!without_pass);
}

TEST_CASE("closed forms: triangular prism") {
    auto p = zoo("prism_triangle");
    auto prof = d_profile(p).dims;
    CHECK(prof == std::vector<int>{0, 1, 0, 0});
    for (const auto& c : closed_form_checks(p))
        if (c.applicable && c.name.find("omitted") == std::string::npos) CHECK(c.pass);
}

TEST_CASE("normal fan sequence") {
    for (const char* name : {"cube(2)", "icosahedron", "simplex(3)", "cuboctahedron"}) {
        CAPTURE(name);
        CHECK(normal_fan_sequence_check(zoo(name)));
    }
}

TEST_CASE("double pyramid recursion") {
    for (const char* name :
         {"cube(2)", "mgon(5)", "cuboctahedron", "crosspoly(3)", "simplex(3)"}) {
        CAPTURE(name);
        CHECK(double_pyramid_recursion_check(zoo(name)));
    }
}

TEST_CASE("ends of the profile vanish") {
    for (const char* name : {"cube(3)", "cuboctahedron", "cyclic(4,8)", "mgon(9)"}) {
        auto prof = d_profile(zoo(name)).dims;
        CHECK(prof.front() == 0);
        CHECK(prof.back() == 0);
    }
}

TEST_CASE("alternating sum identity") {
    for (const char* name : {"cube(3)", "cuboctahedron", "bipyramid_mgon(7)", "cyclic(4,8)"}) {
        auto p = zoo(name);
        auto prof = d_profile(p).dims;
        auto fv = p.f_vector();
        long lhs = 0, rhs = 0;
        for (int k = 0; k <= p.dim(); ++k) lhs += (k % 2 == 0 ? -1 : 1) * prof[k];
        for (int k = 0; k <= p.dim() + 1; ++k)
            rhs += (k % 2 == 0 ? -1 : 1) * (p.dim() + 1 - k) * fv.f(k - 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("profiles are invariant under rational affine maps") {
    std::mt19937 rng(2718);
    for (const char* name : {"cuboctahedron", "cube(2)", "bipyramid_mgon(5)"}) {
        auto p = zoo(name);
        auto expected = d_profile(p).dims;
        for (int t = 0; t < 3; ++t) CHECK(d_profile(random_affine_image(p, rng)).dims == expected);
    }
}
