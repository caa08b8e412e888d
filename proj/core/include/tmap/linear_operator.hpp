#pragma once

#include <tmap/types.hpp>

#include <Eigen/Dense>

namespace tmap {

/// A: ℝⁿ → ℝᵐ with its adjoint.
class LinearOperator {
  public:
    virtual ~LinearOperator() = default;
    virtual Index rows() const = 0;
    virtual Index cols() const = 0;
    /// y = A·x
    virtual void apply(const Vector &x, Vector &y) const = 0;
    /// x = Aᵀ·y
    virtual void adjoint(const Vector &y, Vector &x) const = 0;
};

class DenseOperator final : public LinearOperator {
  public:
    explicit DenseOperator(Eigen::MatrixXd a) : a_{std::move(a)} {}

    Index rows() const override { return a_.rows(); }
    Index cols() const override { return a_.cols(); }
    void apply(const Vector &x, Vector &y) const override { y.noalias() = a_ * x; }
    void adjoint(const Vector &y, Vector &x) const override {
        x.noalias() = a_.transpose() * y;
    }

    const Eigen::MatrixXd &matrix() const noexcept { return a_; }

  private:
    Eigen::MatrixXd a_;
};

} // namespace tmap
