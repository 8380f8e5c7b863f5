#pragma once

#include <vector>

#include "graphspark/rational.hpp"
#include "graphspark/vertex_set.hpp"

namespace graphspark {

using RationalVector = std::vector<Rational>;

/// Dense matrix of exact rationals. Immutable by convention once built; all
/// linear algebra in this library is exact (no floating point anywhere).
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(int rows, int cols)
        : rows_(check_dim(rows)), cols_(check_dim(cols)), e_(static_cast<std::size_t>(rows) * cols) {}

    /// Row-major construction from integer literals (test/fixture helper).
    static RationalMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_symmetric() const;
    bool is_zero() const;

    RationalMatrix transpose() const;

    /// Submatrix with the given row/column index lists (kept order).
    RationalMatrix submatrix(const std::vector<int>& row_idx,
                             const std::vector<int>& col_idx) const;

    RationalMatrix columns(const std::vector<int>& col_idx) const;

    /// Principal submatrix keeping the vertices in `keep`, ascending.
    RationalMatrix principal(const VertexSet& keep) const;

    /// A(v): principal submatrix with row/column v deleted.
    RationalMatrix without_vertex(int v) const;

    RationalVector multiply(const RationalVector& x) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
    static int check_dim(int d);

    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

bool is_zero_vector(const RationalVector& x);

/// Indices of nonzero coordinates.
VertexSet support(const RationalVector& x);

} // namespace graphspark
