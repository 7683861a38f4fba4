#ifndef POLYHODGE_MATRIX_HPP
#define POLYHODGE_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "polyhodge/rational.hpp"

namespace polyhodge {

/// Sparse matrix over Q. Rows are kept as column-sorted (index, value) lists;
/// stored values are never zero.
class RatMatrix {
  public:
    using Entry = std::pair<int, Rational>;
    using Row = std::vector<Entry>;

    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static RatMatrix identity(int n);
    static RatMatrix from_dense(const std::vector<RatVec>& dense);
    /// Columns of the matrix are the given vectors.
    static RatMatrix from_columns(const std::vector<RatVec>& cols, int nrows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Adds v to entry (r, c), dropping it if the sum is zero.
    void add(int r, int c, const Rational& v);
    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;

    const Row& row(int r) const { return data_[r]; }
    Row& row_mut(int r) { return data_[r]; }

    size_t nonzeros() const;
    bool is_zero() const;

    RatMatrix transpose() const;
    RatVec apply(const RatVec& v) const;  // matrix * vector

    friend RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Row> data_;
};

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

/// Dense integer matrix; used for lattice computations (Smith normal form).
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<IntVec> data;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(r, IntVec(c, 0)) {}

    Integer& at(int r, int c) { return data[r][c]; }
    const Integer& at(int r, int c) const { return data[r][c]; }
};

}  // namespace polyhodge

#endif
