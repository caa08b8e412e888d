#pragma once

#include <tmap/linear_operator.hpp>
#include <tmap/types.hpp>


namespace tmap {

/// Orthonormal type-II DCT (the usual "dct"), O(n log n).
///   X_k = s_k Σ_j x_j cos(π(j + ½)k/n),  s_0 = √(1/n), s_k = √(2/n).
Vector dct2(const Vector &x);

/// Orthonormal type-III DCT, the inverse and transpose of dct2.
Vector idct2(const Vector &y);

/// O(n²) direct evaluation of the same sums. Used to cross-check the fast path;
/// keep n ≲ 4096.
Vector dct2_reference(const Vector &x);
Vector idct2_reference(const Vector &y);

/// A·x = (dct2(x))_J for m distinct row indices J ⊂ {0,…,n−1}.
/// Since dct2 is orthonormal, A·Aᵀ = I and ‖A·x‖ ≤ ‖x‖.
class PartialDctOperator final : public LinearOperator {
  public:
    /// Throws ParameterError unless rows are distinct and inside [0, n).
    PartialDctOperator(Index n, IndexSet rows);

    Index rows() const override { return static_cast<Index>(rows_.size()); }
    Index cols() const override { return n_; }
    void apply(const Vector &x, Vector &y) const override;
    void adjoint(const Vector &y, Vector &x) const override;

    /// The selected DCT rows J, in the order they appear in A·x.
    const IndexSet &row_indices() const noexcept { return rows_; }

  private:
    Index n_;
    IndexSet rows_;
};

} // namespace tmap
