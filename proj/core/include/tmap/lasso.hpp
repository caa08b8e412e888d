#pragma once

#include <tmap/linear_operator.hpp>
#include <tmap/oracle.hpp>

#include <memory>

namespace tmap {

struct LassoEvaluation {
    double value = 0; ///< ½‖Ax − b‖²
    Vector grad;      ///< Aᵀ(Ax − b)
    Vector hessvec;   ///< Aᵀ(Av)
};

/// Smooth part of the LASSO at x, plus the Hessian product with v.
LassoEvaluation lasso_value_grad_hessvec(const LinearOperator &op,
                                         const Vector &b, const Vector &x,
                                         const Vector &v);

/// f(x) = ½‖Ax − b‖².
class LassoOracle final : public ProblemOracle {
  public:
    LassoOracle(std::shared_ptr<const LinearOperator> op, Vector b);

    Index dimension() const override { return op_->cols(); }
    double value(const Vector &x) const override;
    double value_and_gradient(const Vector &x, Vector &grad) const override;
    bool has_hessian_vector() const override { return true; }
    HessianProduct hessian_at(const Vector &x) const override;
    /// f(x + d) − f(x) = dᵀg + ½‖Ad‖².
    double value_change(const Vector &x, const Vector &g,
                        const Vector &d) const override;

    const LinearOperator &op() const noexcept { return *op_; }
    const Vector &b() const noexcept { return b_; }

  private:
    std::shared_ptr<const LinearOperator> op_;
    Vector b_;
};

} // namespace tmap
