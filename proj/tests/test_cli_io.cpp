#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyhodge/errors.hpp"
#include "polyhodge/json_io.hpp"
#include "polyhodge/zoo.hpp"

using namespace polyhodge;

TEST_CASE("rational literals") {
    CHECK(rational_from_string("3/4") == frac(3, 4));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("0.25") == frac(1, 4));
    CHECK(rational_from_string("-1.5") == frac(-3, 2));
    CHECK_THROWS_AS(rational_from_string("x/y"), Error);

    CHECK(rational_from_json(nlohmann::json(5)) == Rational(5));
    CHECK(rational_from_json(nlohmann::json("2/6")) == frac(1, 3));
    CHECK(rational_to_json(frac(4, 2)) == nlohmann::json(2));
    CHECK(rational_to_json(frac(1, 3)) == nlohmann::json("1/3"));
}

TEST_CASE("polytope JSON round trip keeps the face lattice") {
    for (const char* name : {"cube(2)", "cuboctahedron", "icosahedron", "simplex(4)",
                             "bipyramid_mgon(5)", "unit_square_lattice"}) {
        CAPTURE(name);
        auto p = zoo(name);
        auto q = polytope_from_json(polytope_to_json(p));
        CHECK(q.name() == p.name());
        REQUIRE(q.vertices() == p.vertices());
        REQUIRE(q.face_count() == p.face_count());
        for (int i = 0; i < p.face_count(); ++i) {
            CHECK(q.face(i).vertex_set == p.face(i).vertex_set);
            CHECK(q.face(i).dim == p.face(i).dim);
        }
    }
}

TEST_CASE("malformed polytope JSON is rejected") {
    CHECK_THROWS_AS(polytope_from_json(nlohmann::json{{"name", "x"}}), Error);
    CHECK_THROWS_AS(polytope_from_json(nlohmann::json::parse(R"({"vertices": [[true]]})")),
                    Error);
}

TEST_CASE("unknown zoo names") { CHECK_THROWS_AS(zoo("megagon"), UnknownName); }
