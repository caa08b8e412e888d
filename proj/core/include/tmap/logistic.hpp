#pragma once

#include <tmap/oracle.hpp>
#include <tmap/sparse_matrix.hpp>

#include <memory>

namespace tmap {

/// log(1 + eᶻ) without overflow.
double softplus(double z) noexcept;

struct ValueGrad {
    double value = 0;
    Vector grad;
};

/// f(x) = (1/m) Σ log(1 + exp(−b_i a_iᵀx)) and its gradient.
/// Throws DataError if a label is not ±1 or sizes disagree.
ValueGrad logistic_value_grad(const SparseRowMatrix &a, const Vector &labels,
                              const Vector &x);

/// Aᵀ D A v / m with D_ii = σ(z_i)(1 − σ(z_i)), z_i = −b_i a_iᵀx.
Vector logistic_hessvec(const SparseRowMatrix &a, const Vector &labels,
                        const Vector &x, const Vector &v);

class LogisticOracle final : public ProblemOracle {
  public:
    LogisticOracle(std::shared_ptr<const SparseRowMatrix> a, Vector labels);

    Index dimension() const override { return a_->cols(); }
    Index samples() const noexcept { return a_->rows(); }
    double value(const Vector &x) const override;
    double value_and_gradient(const Vector &x, Vector &grad) const override;
    bool has_hessian_vector() const override { return true; }
    HessianProduct hessian_at(const Vector &x) const override;
    /// Sums softplus(z_i + Δ_i) − softplus(z_i) evaluated via log1p/expm1.
    double value_change(const Vector &x, const Vector &g,
                        const Vector &d) const override;

    const SparseRowMatrix &matrix() const noexcept { return *a_; }
    const Vector &labels() const noexcept { return labels_; }

  private:
    std::shared_ptr<const SparseRowMatrix> a_;
    Vector labels_;
};

} // namespace tmap
