#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyhodge/linalg.hpp"
#include "polyhodge/smith.hpp"

using namespace polyhodge;

namespace {

RatMatrix random_matrix(std::mt19937& rng, int rows, int cols, int density_pct) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> pct(0, 99);
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (pct(rng) < density_pct) m.set(i, j, frac(num(rng), den(rng)));
    return m;
}

}  // namespace

TEST_CASE("rank on pinned inputs") {
    CHECK(rank(RatMatrix::identity(3)) == 3);
    CHECK(rank(RatMatrix(2, 5)) == 0);
    CHECK(rank(RatMatrix::from_dense({{1, 2, 3}, {2, 4, 6}})) == 1);
}

TEST_CASE("kernel on pinned inputs") {
    CHECK(kernel_basis(RatMatrix::identity(2)).empty());

    auto k = kernel_basis(RatMatrix::from_dense({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * (-1) == k[0][1]);  // proportional to (1, -1)

    // dilation system of the unit square: the two opposite-edge pairs must
    // shrink together, leaving a 2-dimensional kernel (reduced by hand)
    auto square_edges = RatMatrix::from_dense({{1, 0, -1, 0}, {0, 1, 0, -1}});
    CHECK(kernel_basis(square_edges).size() == 2);
}

TEST_CASE("smith diagonal on pinned inputs") {
    IntMatrix id2(2, 2);
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    CHECK(smith_diagonal(id2) == IntVec{1, 1});

    IntMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    CHECK(smith_diagonal(d) == IntVec{1, 6});

    // rows (1,0,1),(0,1,1): the 2x2 minors are 1, 1, -1, so gcd 1 twice
    IntMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 2) = 1;
    m.at(1, 1) = 1;
    m.at(1, 2) = 1;
    CHECK(smith_diagonal(m) == IntVec{1, 1});
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + trial % 9;
        int cols = 1 + (trial * 7) % 9;
        RatMatrix m = random_matrix(rng, rows, cols, 55);

        int r = rank(m);
        CHECK(r == rank(m.transpose()));
        CHECK(static_cast<int>(kernel_basis(m).size()) + r == cols);

        // permuting rows and columns cannot change the rank (exactness)
        RatMatrix p(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (const auto& [j, v] : m.row(i))
                p.set(rows - 1 - i, cols - 1 - j, v);
        CHECK(rank(p) == r);
    }
}

TEST_CASE("kernel vectors annihilate and are independent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        RatMatrix m = random_matrix(rng, 2 + trial % 7, 2 + (trial * 3) % 8, 60);
        auto basis = kernel_basis(m);
        for (const auto& v : basis) CHECK(is_zero(m.apply(v)));
        CHECK(rank_of_vectors(basis) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("serial and parallel backends agree exactly") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        RatMatrix m = random_matrix(rng, 30 + trial * 9, 40 + trial * 5, 12);
        auto serial = echelonize(m, Backend::Serial);
        auto parallel = echelonize(m, Backend::Parallel);
        CHECK(serial.pivot_cols == parallel.pivot_cols);
        REQUIRE(serial.rows.size() == parallel.rows.size());
        for (size_t i = 0; i < serial.rows.size(); ++i) CHECK(serial.rows[i] == parallel.rows[i]);

        auto ks = kernel_basis(m, Backend::Serial);
        auto kp = kernel_basis(m, Backend::Parallel);
        REQUIRE(ks.size() == kp.size());
        for (size_t i = 0; i < ks.size(); ++i) CHECK(ks[i] == kp[i]);
    }
}

TEST_CASE("solve recovers consistent systems and rejects inconsistent ones") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        RatMatrix m = random_matrix(rng, 3 + trial % 5, 3 + (trial * 2) % 5, 65);
        RatVec x(m.cols());
        std::uniform_int_distribution<int> num(-3, 3);
        for (auto& xi : x) xi = num(rng);
        RatVec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }

    auto none = solve(RatMatrix::from_dense({{1, 1}, {1, 1}}), RatVec{0, 1});
    CHECK(!none.has_value());
}

TEST_CASE("smith divisibility chain on random integer matrices") {
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 1 + trial % 5;
        int cols = 1 + (trial * 3) % 5;
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
        IntVec d = smith_diagonal(m);
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i] == 0)
                CHECK(d[i + 1] == 0);
            else
                CHECK(d[i + 1] % d[i] == 0);
        }
    }
}

TEST_CASE("determinant sign") {
    CHECK(determinant_sign({{1, 0}, {0, 1}}) == 1);
    CHECK(determinant_sign({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant_sign({{1, 2}, {2, 4}}) == 0);
    CHECK(determinant_sign({}) == 1);
}

TEST_CASE("greedy independent subset is deterministic and maximal") {
    std::vector<RatVec> vecs = {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    CHECK(greedy_independent_subset(vecs) == std::vector<int>{0, 2, 4});
}
