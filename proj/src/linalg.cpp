#include "polyhodge/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

namespace polyhodge {

namespace {

using Row = RatMatrix::Row;

// target -= factor * source, reporting presence changes per column of source.
void axpy_into(Row& target, const Rational& factor, const Row& source,
               std::vector<std::pair<int, int>>* delta) {
    Row result;
    result.reserve(target.size() + source.size());
    auto ti = target.begin();
    for (const auto& [col, sval] : source) {
        while (ti != target.end() && ti->first < col) {
            result.push_back(*ti);
            ++ti;
        }
        Rational newval = -factor * sval;
        bool had = (ti != target.end() && ti->first == col);
        if (had) {
            newval += ti->second;
            ++ti;
        }
        bool has = (newval != 0);
        if (has) result.emplace_back(col, newval);
        if (delta && had != has) delta->emplace_back(col, has ? 1 : -1);
    }
    result.insert(result.end(), ti, target.end());
    target.swap(result);
}

Rational value_at(const Row& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const RatMatrix::Entry& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == col) return it->second;
    return 0;
}

bool use_parallel(Backend backend, int rows) {
    if (backend == Backend::Serial) return false;
    if (backend == Backend::Parallel) return true;
    return rows >= 64;
}

}  // namespace

Echelon echelonize(const RatMatrix& m, Backend backend) {
    const bool parallel = use_parallel(backend, m.rows());
    const int ncols = m.cols();

    std::vector<Row> work(m.rows());
    for (int i = 0; i < m.rows(); ++i) work[i] = m.row(i);

    std::vector<char> alive(m.rows(), 1);
    std::vector<int> col_count(ncols, 0);
    for (int i = 0; i < m.rows(); ++i) {
        if (work[i].empty()) alive[i] = 0;
        for (const auto& [c, v] : work[i]) ++col_count[c];
    }

    Echelon ech;
    ech.cols = ncols;

    std::vector<int> updates;
    std::vector<std::vector<std::pair<int, int>>> deltas;

    for (;;) {
        // deterministic sparsity-guided pivot: rarest column, then shortest row
        int pivot_col = -1;
        for (int c = 0; c < ncols; ++c)
            if (col_count[c] > 0 && (pivot_col < 0 || col_count[c] < col_count[pivot_col]))
                pivot_col = c;
        if (pivot_col < 0) break;

        int pivot_row = -1;
        size_t best_len = std::numeric_limits<size_t>::max();
        for (int i = 0; i < m.rows(); ++i) {
            if (!alive[i]) continue;
            if (value_at(work[i], pivot_col) == 0) continue;
            if (work[i].size() < best_len) {
                best_len = work[i].size();
                pivot_row = i;
            }
        }
        assert(pivot_row >= 0);

        alive[pivot_row] = 0;
        for (const auto& [c, v] : work[pivot_row]) --col_count[c];
        const Row pivot = work[pivot_row];
        const Rational pivot_val = value_at(pivot, pivot_col);

        updates.clear();
        for (int i = 0; i < m.rows(); ++i)
            if (alive[i] && value_at(work[i], pivot_col) != 0) updates.push_back(i);
        deltas.assign(updates.size(), {});

#pragma omp parallel for schedule(dynamic, 8) if (parallel)
        for (long long u = 0; u < static_cast<long long>(updates.size()); ++u) {
            int i = updates[u];
            Rational factor = value_at(work[i], pivot_col) / pivot_val;
            axpy_into(work[i], factor, pivot, &deltas[u]);
        }

        for (size_t u = 0; u < updates.size(); ++u) {
            for (const auto& [c, d] : deltas[u]) col_count[c] += d;
            if (work[updates[u]].empty()) alive[updates[u]] = 0;
        }

        ech.rows.push_back(std::move(work[pivot_row]));
        ech.pivot_cols.push_back(pivot_col);
    }
    return ech;
}

int rank(const RatMatrix& m, Backend backend) { return echelonize(m, backend).rank(); }

namespace {

// Back-substitute one kernel vector: prescribed values on non-pivot columns,
// pivot values solved in reverse elimination order (row i only touches its
// own pivot, later pivots, and non-pivot columns).
RatVec back_substitute(const Echelon& ech, const RatVec& prescribed) {
    RatVec x = prescribed;
    for (int i = ech.rank() - 1; i >= 0; --i) {
        int pc = ech.pivot_cols[i];
        Rational acc = 0;
        Rational diag = 0;
        for (const auto& [c, v] : ech.rows[i]) {
            if (c == pc)
                diag = v;
            else
                acc += v * x[c];
        }
        x[pc] = -acc / diag;
    }
    return x;
}

}  // namespace

std::vector<RatVec> kernel_basis(const RatMatrix& m, Backend backend) {
    const bool parallel = use_parallel(backend, m.rows());
    Echelon ech = echelonize(m, backend);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : ech.pivot_cols) is_pivot[c] = 1;

    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    std::vector<RatVec> basis(free_cols.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long k = 0; k < static_cast<long long>(free_cols.size()); ++k) {
        RatVec seed(m.cols(), 0);
        seed[free_cols[k]] = 1;
        basis[k] = back_substitute(ech, seed);
    }
    return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b, Backend backend) {
    assert(static_cast<int>(b.size()) == m.rows());
    // solutions of m x = b are kernel vectors of [m | -b] with last entry 1
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        aug.row_mut(i) = m.row(i);
        if (b[i] != 0) aug.row_mut(i).emplace_back(m.cols(), -b[i]);
    }
    for (const auto& v : kernel_basis(aug, backend)) {
        if (v[m.cols()] == 0) continue;
        RatVec x(m.cols());
        for (int j = 0; j < m.cols(); ++j) x[j] = v[j] / v[m.cols()];
        return x;
    }
    return std::nullopt;
}

std::optional<RatVec> express_in_columns(const std::vector<RatVec>& columns, const RatVec& x) {
    int nrows = static_cast<int>(x.size());
    return solve(RatMatrix::from_columns(columns, nrows), x, Backend::Serial);
}

int rank_of_vectors(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) return 0;
    return rank(RatMatrix::from_dense(vectors), Backend::Serial);
}

std::vector<int> greedy_independent_subset(const std::vector<RatVec>& vectors) {
    std::vector<int> chosen;
    std::map<int, RatVec> echelon;  // leading column -> reduced row
    for (int idx = 0; idx < static_cast<int>(vectors.size()); ++idx) {
        RatVec v = vectors[idx];
        for (const auto& [lead, row] : echelon) {
            if (v[lead] != 0) {
                Rational f = v[lead] / row[lead];
                for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
            }
        }
        int lead = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                lead = static_cast<int>(j);
                break;
            }
        if (lead >= 0) {
            chosen.push_back(idx);
            echelon.emplace(lead, std::move(v));
        }
    }
    return chosen;
}

int determinant_sign(const std::vector<RatVec>& columns) {
    int n = static_cast<int>(columns.size());
    if (n == 0) return 1;  // empty product
    assert(static_cast<int>(columns[0].size()) == n);
    std::vector<RatVec> a(n, RatVec(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a[i][j] = columns[j][i];

    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        if (a[k][k] < 0) sign = -sign;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return sign;
}

}  // namespace polyhodge
