#pragma once

#include <tmap/linear_operator.hpp>
#include <tmap/types.hpp>

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace tmap {

/// Compressed sparse row matrix with 0-based column indices, strictly
/// increasing within each row.
class SparseRowMatrix {
  public:
    SparseRowMatrix() = default;

    /// Validating constructor. row_ptr has rows + 1 entries starting at 0.
    SparseRowMatrix(Index rows, Index cols, std::vector<Index> row_ptr,
                    std::vector<Index> col_idx, std::vector<double> values);

    static SparseRowMatrix from_dense(const Eigen::MatrixXd &dense);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    Index nnz() const noexcept { return static_cast<Index>(values_.size()); }

    std::span<const Index> row_indices(Index r) const;
    std::span<const double> row_values(Index r) const;

    const std::vector<Index> &row_ptr() const noexcept { return row_ptr_; }

    /// y = A·x
    void multiply(const Vector &x, Vector &y) const;
    /// x = Aᵀ·y
    void multiply_transpose(const Vector &y, Vector &x) const;

    /// Same matrix with `cols` columns; throws if cols is below the widest row.
    SparseRowMatrix with_cols(Index cols) const;

    Eigen::MatrixXd to_dense() const;

    bool operator==(const SparseRowMatrix &) const = default;

  private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Index> row_ptr_{0};
    std::vector<Index> col_idx_;
    std::vector<double> values_;
};

/// Incremental row-by-row builder.
class SparseRowBuilder {
  public:
    /// Appends a row of (0-based column, value) pairs; columns must ascend.
    void add_row(std::span<const std::pair<Index, double>> entries);
    Index rows() const noexcept { return static_cast<Index>(row_ptr_.size()) - 1; }
    Index max_col() const noexcept { return max_col_; }
    /// Finishes with the given column count (-1: one past the largest column).
    SparseRowMatrix build(Index cols = -1) &&;

  private:
    std::vector<Index> row_ptr_{0};
    std::vector<Index> col_idx_;
    std::vector<double> values_;
    Index max_col_ = -1;
};

class SparseOperator final : public LinearOperator {
  public:
    explicit SparseOperator(std::shared_ptr<const SparseRowMatrix> a)
        : a_{std::move(a)} {}

    Index rows() const override { return a_->rows(); }
    Index cols() const override { return a_->cols(); }
    void apply(const Vector &x, Vector &y) const override { a_->multiply(x, y); }
    void adjoint(const Vector &y, Vector &x) const override {
        a_->multiply_transpose(y, x);
    }

  private:
    std::shared_ptr<const SparseRowMatrix> a_;
};

} // namespace tmap
