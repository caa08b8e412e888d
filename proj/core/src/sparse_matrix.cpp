#include <tmap/errors.hpp>
#include <tmap/sparse_matrix.hpp>

#include <cmath>
#include <string>

namespace tmap {

SparseRowMatrix::SparseRowMatrix(Index rows, Index cols, std::vector<Index> row_ptr,
                                 std::vector<Index> col_idx, std::vector<double> values)
    : rows_{rows}, cols_{cols}, row_ptr_{std::move(row_ptr)},
      col_idx_{std::move(col_idx)}, values_{std::move(values)} {
    if (rows_ < 0 || cols_ < 0)
        throw DimensionError("SparseRowMatrix: negative shape");
    if (row_ptr_.size() != static_cast<std::size_t>(rows_) + 1 || row_ptr_.front() != 0)
        throw DimensionError("SparseRowMatrix: row_ptr must have rows + 1 entries starting at 0");
    if (col_idx_.size() != values_.size() ||
        row_ptr_.back() != static_cast<Index>(col_idx_.size()))
        throw DimensionError("SparseRowMatrix: row_ptr does not match nonzero count");
    for (Index r = 0; r < rows_; ++r) {
        const Index lo = row_ptr_[static_cast<std::size_t>(r)];
        const Index hi = row_ptr_[static_cast<std::size_t>(r) + 1];
        if (hi < lo)
            throw DimensionError("SparseRowMatrix: row_ptr not monotone");
        for (Index j = lo; j < hi; ++j) {
            const Index c = col_idx_[static_cast<std::size_t>(j)];
            if (c < 0 || c >= cols_)
                throw DimensionError("SparseRowMatrix: column index out of range in row " +
                                     std::to_string(r));
            if (j > lo && c <= col_idx_[static_cast<std::size_t>(j) - 1])
                throw DimensionError("SparseRowMatrix: columns not strictly increasing in row " +
                                     std::to_string(r));
            if (!std::isfinite(values_[static_cast<std::size_t>(j)]))
                throw NumericError("SparseRowMatrix: non-finite value in row " +
                                   std::to_string(r));
        }
    }
}

SparseRowMatrix SparseRowMatrix::from_dense(const Eigen::MatrixXd &dense) {
    SparseRowBuilder builder;
    std::vector<std::pair<Index, double>> row;
    for (Index r = 0; r < dense.rows(); ++r) {
        row.clear();
        for (Index c = 0; c < dense.cols(); ++c)
            if (dense(r, c) != 0)
                row.emplace_back(c, dense(r, c));
        builder.add_row(row);
    }
    return std::move(builder).build(dense.cols());
}

std::span<const Index> SparseRowMatrix::row_indices(Index r) const {
    const auto lo = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(r)]);
    const auto hi = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(r) + 1]);
    return std::span<const Index>(col_idx_).subspan(lo, hi - lo);
}

std::span<const double> SparseRowMatrix::row_values(Index r) const {
    const auto lo = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(r)]);
    const auto hi = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(r) + 1]);
    return std::span<const double>(values_).subspan(lo, hi - lo);
}

void SparseRowMatrix::multiply(const Vector &x, Vector &y) const {
    require_same_size(x.size(), cols_, "SparseRowMatrix::multiply");
    y.resize(rows_);
    for (Index r = 0; r < rows_; ++r) {
        double acc = 0;
        const Index hi = row_ptr_[static_cast<std::size_t>(r) + 1];
        for (Index j = row_ptr_[static_cast<std::size_t>(r)]; j < hi; ++j)
            acc += values_[static_cast<std::size_t>(j)] * x[col_idx_[static_cast<std::size_t>(j)]];
        y[r] = acc;
    }
}

void SparseRowMatrix::multiply_transpose(const Vector &y, Vector &x) const {
    require_same_size(y.size(), rows_, "SparseRowMatrix::multiply_transpose");
    x.setZero(cols_);
    for (Index r = 0; r < rows_; ++r) {
        const double yr = y[r];
        if (yr == 0)
            continue;
        const Index hi = row_ptr_[static_cast<std::size_t>(r) + 1];
        for (Index j = row_ptr_[static_cast<std::size_t>(r)]; j < hi; ++j)
            x[col_idx_[static_cast<std::size_t>(j)]] += values_[static_cast<std::size_t>(j)] * yr;
    }
}

SparseRowMatrix SparseRowMatrix::with_cols(Index cols) const {
    return SparseRowMatrix(rows_, cols, row_ptr_, col_idx_, values_);
}

Eigen::MatrixXd SparseRowMatrix::to_dense() const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(rows_, cols_);
    for (Index r = 0; r < rows_; ++r) {
        auto idx = row_indices(r);
        auto val = row_values(r);
        for (std::size_t j = 0; j < idx.size(); ++j)
            d(r, idx[j]) = val[j];
    }
    return d;
}

void SparseRowBuilder::add_row(std::span<const std::pair<Index, double>> entries) {
    Index prev = -1;
    for (const auto &[c, v] : entries) {
        if (c <= prev)
            throw DimensionError("SparseRowBuilder: columns must be strictly increasing");
        col_idx_.push_back(c);
        values_.push_back(v);
        prev = c;
    }
    if (prev > max_col_)
        max_col_ = prev;
    row_ptr_.push_back(static_cast<Index>(col_idx_.size()));
}

SparseRowMatrix SparseRowBuilder::build(Index cols) && {
    const Index rows = static_cast<Index>(row_ptr_.size()) - 1;
    if (cols < 0)
        cols = max_col_ + 1;
    return SparseRowMatrix(rows, cols, std::move(row_ptr_), std::move(col_idx_),
                           std::move(values_));
}

} // namespace tmap
