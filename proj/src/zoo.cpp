#include "polyhodge/zoo.hpp"

#include <regex>

#include "polyhodge/errors.hpp"

namespace polyhodge {

namespace {

Polytope make_simplex(int n) {
    std::vector<RatVec> pts(1, RatVec(n, 0));
    for (int i = 0; i < n; ++i) {
        RatVec e(n, 0);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return Polytope::from_vertices(std::move(pts), "simplex(" + std::to_string(n) + ")");
}

Polytope make_cube(int n) {
    std::vector<RatVec> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        RatVec v(n);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
        pts.push_back(std::move(v));
    }
    return Polytope::from_vertices(std::move(pts), "cube(" + std::to_string(n) + ")");
}

Polytope make_crosspoly(int n) {
    std::vector<RatVec> pts;
    for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            RatVec v(n, 0);
            v[i] = s;
            pts.push_back(std::move(v));
        }
    return Polytope::from_vertices(std::move(pts), "crosspoly(" + std::to_string(n) + ")");
}

// m rational points on the unit circle, in angular order (tangent half-angle
// parametrization keeps everything exact)
Polytope make_mgon(int m) {
    std::vector<RatVec> pts;
    for (int k = 0; k < m; ++k) {
        Rational t(k);
        Rational denom = 1 + t * t;
        pts.push_back({(1 - t * t) / denom, 2 * t / denom});
    }
    return Polytope::from_vertices(std::move(pts), "mgon(" + std::to_string(m) + ")");
}

// combinatorially icosahedral rational model: the golden ratio is replaced
// by 13/8, which keeps all twenty facets triangular
Polytope make_icosahedron() {
    const Rational t = frac(13, 8);
    std::vector<RatVec> pts;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            pts.push_back({0, s1 * Rational(1), s2 * t});
            pts.push_back({s1 * Rational(1), s2 * t, 0});
            pts.push_back({s1 * t, 0, s2 * Rational(1)});
        }
    return Polytope::from_vertices(std::move(pts), "icosahedron");
}

Polytope make_cuboctahedron() {
    std::vector<RatVec> pts;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            pts.push_back({s1 * Rational(1), s2 * Rational(1), 0});
            pts.push_back({s1 * Rational(1), 0, s2 * Rational(1)});
            pts.push_back({0, s1 * Rational(1), s2 * Rational(1)});
        }
    return Polytope::from_vertices(std::move(pts), "cuboctahedron");
}

Polytope make_cyclic(int d, int n) {
    std::vector<RatVec> pts;
    for (int k = 1; k <= n; ++k) {
        RatVec v(d);
        Rational t(k), power = 1;
        for (int i = 0; i < d; ++i) {
            power *= t;
            v[i] = power;
        }
        pts.push_back(std::move(v));
    }
    return Polytope::from_vertices(std::move(pts),
                                   "cyclic(" + std::to_string(d) + "," + std::to_string(n) + ")");
}

Polytope make_unit_square() {
    return Polytope::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, "unit_square_lattice");
}

Polytope make_unit_cube() {
    std::vector<RatVec> pts;
    for (int mask = 0; mask < 8; ++mask)
        pts.push_back({Rational(mask & 1), Rational((mask >> 1) & 1), Rational((mask >> 2) & 1)});
    return Polytope::from_vertices(std::move(pts), "unit_cube_lattice");
}

}  // namespace

Polytope zoo(const std::string& name) {
    std::smatch m;
    if (std::regex_match(name, m, std::regex(R"(simplex\((\d+)\))")))
        return make_simplex(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(cube\((\d+)\))"))) return make_cube(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(crosspoly\((\d+)\))")))
        return make_crosspoly(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(mgon\((\d+)\))"))) return make_mgon(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(pyramid_mgon\((\d+)\))"))) {
        Polytope p = pyramid(make_mgon(std::stoi(m[1])));
        p.set_name("pyramid_mgon(" + std::string(m[1]) + ")");
        return p;
    }
    if (std::regex_match(name, m, std::regex(R"(bipyramid_mgon\((\d+)\))"))) {
        Polytope p = double_pyramid(make_mgon(std::stoi(m[1])));
        p.set_name("bipyramid_mgon(" + std::string(m[1]) + ")");
        return p;
    }
    if (std::regex_match(name, m, std::regex(R"(cyclic\((\d+),(\d+)\))")))
        return make_cyclic(std::stoi(m[1]), std::stoi(m[2]));
    if (name == "icosahedron") return make_icosahedron();
    if (name == "cuboctahedron") return make_cuboctahedron();
    if (name == "dp_cuboctahedron") {
        Polytope p = double_pyramid(make_cuboctahedron());
        p.set_name("dp_cuboctahedron");
        return p;
    }
    if (name == "prism_triangle") {
        Polytope p = prism(make_simplex(2));
        p.set_name("prism_triangle");
        return p;
    }
    if (name == "unit_square_lattice") return make_unit_square();
    if (name == "unit_cube_lattice") return make_unit_cube();
    throw UnknownName("unknown zoo polytope: " + name);
}

std::vector<std::string> zoo_names() {
    return {"simplex(n)",      "cube(n)",        "crosspoly(n)",        "mgon(m)",
            "pyramid_mgon(m)", "bipyramid_mgon(m)", "icosahedron",      "cuboctahedron",
            "dp_cuboctahedron", "prism_triangle", "cyclic(d,n)",        "unit_square_lattice",
            "unit_cube_lattice"};
}

}  // namespace polyhodge
