#include "graphspark/rational_matrix.hpp"

namespace graphspark {

int RationalMatrix::check_dim(int d) {
    if (d < 1) throw DomainError("matrix dimensions must be positive");
    return d;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DomainError("matrix dimensions must be positive");
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw DomainError("ragged matrix rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(rows[i][j]);
    }
    return m;
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& row_idx,
                                         const std::vector<int>& col_idx) const {
    RationalMatrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return s;
}

RationalMatrix RationalMatrix::columns(const std::vector<int>& col_idx) const {
    std::vector<int> all_rows(rows_);
    for (int i = 0; i < rows_; ++i) all_rows[i] = i;
    return submatrix(all_rows, col_idx);
}

RationalMatrix RationalMatrix::principal(const VertexSet& keep) const {
    auto idx = keep.to_vector();
    return submatrix(idx, idx);
}

RationalMatrix RationalMatrix::without_vertex(int v) const {
    VertexSet keep = VertexSet::full(rows_);
    keep.reset(v);
    return principal(keep);
}

RationalVector RationalMatrix::multiply(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DomainError("matrix-vector dimension mismatch");
    RationalVector y(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational acc;
        for (int j = 0; j < cols_; ++j)
            if (!x[j].is_zero() && !at(i, j).is_zero()) acc += at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

bool is_zero_vector(const RationalVector& x) {
    for (const auto& v : x)
        if (!v.is_zero()) return false;
    return true;
}

VertexSet support(const RationalVector& x) {
    VertexSet s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) s.set(static_cast<int>(i));
    return s;
}

} // namespace graphspark
