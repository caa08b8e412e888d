#pragma once

#include <tmap/types.hpp>

#include <functional>

namespace tmap {

/// v ↦ ∇²f(x)·v for a fixed x, writing into `out` (resized by the callee).
using HessianProduct = std::function<void(const Vector &v, Vector &out)>;

/// Smooth part f of ψ = f + γ‖·‖₁.
///
/// Implementations are immutable after construction and every member is safe
/// to call concurrently.
class ProblemOracle {
  public:
    virtual ~ProblemOracle() = default;

    virtual Index dimension() const = 0;

    virtual double value(const Vector &x) const = 0;

    /// Returns f(x) and writes ∇f(x) into `grad`.
    virtual double value_and_gradient(const Vector &x, Vector &grad) const = 0;

    virtual bool has_hessian_vector() const { return false; }

    /// Binds x once so that repeated products (e.g. inside CG) do not redo
    /// the x-dependent work. Throws CapabilityError when unsupported.
    virtual HessianProduct hessian_at(const Vector &x) const;

    /// f(x + d) − f(x), given g = ∇f(x).
    ///
    /// The default subtracts two values. Oracles override it with a formula in
    /// the increment so that decreases far below the rounding level of f(x)
    /// are still resolved; the line searches rely on that near a solution.
    virtual double value_change(const Vector &x, const Vector &g,
                                const Vector &d) const;

    /// One-shot Hessian-vector product.
    Vector hessian_vector(const Vector &x, const Vector &v) const;
};

/// γ‖x‖₁.
double l1_term(const Vector &x, double gamma);

/// ψ(x) = f(x) + γ‖x‖₁.
double composite_value(const ProblemOracle &oracle, const Vector &x,
                       double gamma);

/// ψ(x) − ψ(y) for y = x + d, assembled from ProblemOracle::value_change and a
/// termwise difference of the ℓ1 parts.
double composite_decrease(const ProblemOracle &oracle, const Vector &x,
                          const Vector &g, const Vector &y, double gamma);

} // namespace tmap
