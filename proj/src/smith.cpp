#include "polyhodge/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace polyhodge {

namespace {

// Position of the nonzero entry with smallest absolute value in the
// trailing block starting at (k, k); (-1, -1) if the block is zero.
std::pair<int, int> smallest_entry(const IntMatrix& m, int k) {
    std::pair<int, int> best{-1, -1};
    Integer best_abs = 0;
    for (int i = k; i < m.rows; ++i)
        for (int j = k; j < m.cols; ++j) {
            if (m.at(i, j) == 0) continue;
            Integer a = abs(m.at(i, j));
            if (best.first < 0 || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

IntVec smith_diagonal(IntMatrix m) {
    int n = std::min(m.rows, m.cols);
    IntVec diag(n, 0);

    for (int k = 0; k < n; ++k) {
        for (;;) {
            auto [pi, pj] = smallest_entry(m, k);
            if (pi < 0) goto done;  // trailing block zero; remaining divisors are 0
            std::swap(m.data[k], m.data[pi]);
            if (pj != k)
                for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, k), m.at(i, pj));

            bool reduced = true;
            for (int i = k + 1; i < m.rows; ++i) {
                if (m.at(i, k) == 0) continue;
                Integer q = m.at(i, k) / m.at(k, k);
                for (int j = k; j < m.cols; ++j) m.at(i, j) -= q * m.at(k, j);
                if (m.at(i, k) != 0) reduced = false;
            }
            for (int j = k + 1; j < m.cols; ++j) {
                if (m.at(k, j) == 0) continue;
                Integer q = m.at(k, j) / m.at(k, k);
                for (int i = k; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, k);
                if (m.at(k, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // pivot must divide every remaining entry; if not, fold the
            // offending row in and restart the reduction
            bool divides = true;
            for (int i = k + 1; i < m.rows && divides; ++i)
                for (int j = k + 1; j < m.cols && divides; ++j)
                    if (m.at(i, j) % m.at(k, k) != 0) {
                        for (int jj = k; jj < m.cols; ++jj) m.at(k, jj) += m.at(i, jj);
                        divides = false;
                    }
            if (divides) break;
        }
        diag[k] = abs(m.at(k, k));
    }
done:
    return diag;
}

}  // namespace polyhodge
