// Acceptance suite: one test case per criterion group, one printed line per
// individual check.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "polyhodge/selfcheck.hpp"

using namespace polyhodge;

namespace {

void run_group(int criterion) {
    auto results = run_criterion(criterion);
    REQUIRE(!results.empty());
    for (const auto& r : results) {
        std::string line = r.pass ? "PASS" : "FAIL";
        line += " [criterion " + std::to_string(criterion) + "] " + r.name;
        if (!r.lhs.empty() || !r.rhs.empty()) line += "  (" + r.lhs + " | " + r.rhs + ")";
        std::printf("%s\n", line.c_str());
        std::fflush(stdout);
        CHECK_MESSAGE(r.pass, line);
    }
}

}  // namespace

TEST_CASE("criterion 1: paper regression table") { run_group(1); }
TEST_CASE("criterion 2: cross-method consistency") { run_group(2); }
TEST_CASE("criterion 3: flag-system oracle") { run_group(3); }
TEST_CASE("criterion 4: double-pyramid recursion") { run_group(4); }
TEST_CASE("criterion 5: nerve E2 entries") { run_group(5); }
TEST_CASE("criterion 6: cleaning and certificate soundness") { run_group(6); }
TEST_CASE("criterion 7: cleaning confluence") { run_group(7); }
TEST_CASE("criterion 8: toric gradings") { run_group(8); }
TEST_CASE("criterion 9: structural property suites") { run_group(9); }
