#ifndef POLYHODGE_SELFCHECK_HPP
#define POLYHODGE_SELFCHECK_HPP

#include <string>
#include <vector>

#include "polyhodge/linalg.hpp"

namespace polyhodge {

/// One named regression or consistency check. `lhs`/`rhs` carry the compared
/// values rendered as text; equality (or the stated predicate) passed iff
/// `pass`.
struct CheckResult {
    int criterion = 0;  // 1..9, grouping for the acceptance suite
    std::string name;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    double seconds = 0.0;
};

/// Run every check of one criterion group (1..9).
std::vector<CheckResult> run_criterion(int criterion, Backend backend = Backend::Auto);

/// The whole table, criteria 1 through 9.
std::vector<CheckResult> run_selfcheck(Backend backend = Backend::Auto);

}  // namespace polyhodge

#endif
