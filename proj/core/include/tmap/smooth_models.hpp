#pragma once

#include <tmap/oracle.hpp>

#include <Eigen/Dense>

namespace tmap {

/// f(x) = ½xᵀQx − qᵀx with an explicit symmetric Q.
class QuadraticOracle final : public ProblemOracle {
  public:
    QuadraticOracle(Eigen::MatrixXd q_mat, Vector q_vec);

    Index dimension() const override { return q_vec_.size(); }
    double value(const Vector &x) const override;
    double value_and_gradient(const Vector &x, Vector &grad) const override;
    bool has_hessian_vector() const override { return true; }
    HessianProduct hessian_at(const Vector &x) const override;
    double value_change(const Vector &x, const Vector &g,
                        const Vector &d) const override;

    const Eigen::MatrixXd &hessian() const noexcept { return q_mat_; }

  private:
    Eigen::MatrixXd q_mat_;
    Vector q_vec_;
};

/// f(x) = Σ_i x_i² / (1 + x_i²). Smooth, bounded and nonconvex for
/// |x_i| > 1/√3; the only stationary point of f + γ‖·‖₁ (γ > 0) is 0.
class GemanMcClureOracle final : public ProblemOracle {
  public:
    explicit GemanMcClureOracle(Index n) : n_{n} {}

    Index dimension() const override { return n_; }
    double value(const Vector &x) const override;
    double value_and_gradient(const Vector &x, Vector &grad) const override;
    bool has_hessian_vector() const override { return true; }
    HessianProduct hessian_at(const Vector &x) const override;

  private:
    Index n_;
};

} // namespace tmap
