#ifndef POLYHODGE_LINALG_HPP
#define POLYHODGE_LINALG_HPP

#include <optional>
#include <vector>

#include "polyhodge/matrix.hpp"

namespace polyhodge {

/// Elimination backend. `Serial` is the reference implementation; `Parallel`
/// runs the independent row updates under OpenMP. Both follow the same
/// deterministic pivot sequence, so their outputs are bit-identical.
/// `Auto` picks Parallel for matrices with at least 64 rows.
enum class Backend { Auto, Serial, Parallel };

/// Row echelon form data produced by exact Gaussian elimination.
struct Echelon {
    std::vector<RatMatrix::Row> rows;  // pivot rows, in elimination order
    std::vector<int> pivot_cols;       // pivot column of each row
    int cols = 0;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon echelonize(const RatMatrix& m, Backend backend = Backend::Auto);

int rank(const RatMatrix& m, Backend backend = Backend::Auto);

/// Basis of { v : m v = 0 }. One vector per free column, in increasing column
/// order; the vector for free column f has entry 1 at f.
std::vector<RatVec> kernel_basis(const RatMatrix& m, Backend backend = Backend::Auto);

/// One solution of m x = b, or nullopt if inconsistent (free variables 0).
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b, Backend backend = Backend::Auto);

/// Coefficients expressing x in the given (independent) columns, or nullopt
/// if x is outside their span.
std::optional<RatVec> express_in_columns(const std::vector<RatVec>& columns, const RatVec& x);

int rank_of_vectors(const std::vector<RatVec>& vectors);

/// Greedy deterministic choice: indices of the input vectors forming a basis
/// of their span (first vector that enlarges the span wins).
std::vector<int> greedy_independent_subset(const std::vector<RatVec>& vectors);

/// Sign of the determinant of a square matrix given by columns: -1, 0, or +1.
int determinant_sign(const std::vector<RatVec>& columns);

}  // namespace polyhodge

#endif
