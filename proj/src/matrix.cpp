#include "polyhodge/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace polyhodge {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, 1);
    return m;
}

RatMatrix RatMatrix::from_dense(const std::vector<RatVec>& dense) {
    int r = static_cast<int>(dense.size());
    int c = r == 0 ? 0 : static_cast<int>(dense[0].size());
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (dense[i][j] != 0) m.data_[i].emplace_back(j, dense[i][j]);
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols, int nrows) {
    RatMatrix m(nrows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        assert(static_cast<int>(cols[j].size()) == nrows);
        for (int i = 0; i < nrows; ++i)
            if (cols[j][i] != 0) m.data_[i].emplace_back(j, cols[j][i]);
    }
    for (auto& row : m.data_)
        std::sort(row.begin(), row.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return m;
}

void RatMatrix::add(int r, int c, const Rational& v) {
    if (v == 0) return;
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

void RatMatrix::set(int r, int c, const Rational& v) {
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

Rational RatMatrix::get(int r, int c) const {
    const Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return 0;
}

size_t RatMatrix::nonzeros() const {
    size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool RatMatrix::is_zero() const { return nonzeros() == 0; }

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    return t;  // rows already sorted because i increases
}

RatVec RatMatrix::apply(const RatVec& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    RatVec out(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, val] : data_[i]) out[i] += val * v[j];
    return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    assert(a.cols_ == b.rows_);
    RatMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        RatVec acc(b.cols_, 0);
        for (const auto& [k, av] : a.data_[i])
            for (const auto& [j, bv] : b.data_[k]) acc[j] += av * bv;
        for (int j = 0; j < b.cols_; ++j)
            if (acc[j] != 0) out.data_[i].emplace_back(j, acc[j]);
    }
    return out;
}

}  // namespace polyhodge
