#pragma once

#include <tmap/oracle.hpp>
#include <tmap/types.hpp>

#include <string_view>

namespace tmap {

/// μ = c·‖[residual⁺; shifted_grad⁻]‖^δ.
double compute_mu(const Vector &residual_plus, const Vector &shifted_grad_minus,
                  double c, double delta);

/// The principal sub-Hessian [∇²f(x)]_{I⁻×I⁻} as an operator on vectors over
/// I⁻. Never materializes the submatrix.
class MaskedHessian {
  public:
    MaskedHessian(const ProblemOracle &oracle, const Vector &x, IndexSet minus);

    Index size() const noexcept { return static_cast<Index>(minus_.size()); }

    /// out = [∇²f(x)·embed(v_bar)]_{I⁻}
    void apply(const Vector &v_bar, Vector &out) const;

  private:
    HessianProduct product_;
    IndexSet minus_;
    Index n_;
    mutable Vector full_in_;
    mutable Vector full_out_;
};

/// [∇²f(x)·embed(v_bar)]_{I⁻}; embed places v_bar on I⁻ and zeros on I⁺.
Vector masked_hessvec(const ProblemOracle &oracle, const Vector &x,
                      const IndexSet &minus, const Vector &v_bar);

enum class NewtonStopReason {
    tolerance_met,
    max_iters,
    zero_rhs,
    /// dᵀ(H + μI)d ≤ 0 along a CG direction (nonconvex f). The step falls back
    /// to rhs/μ, the exact solution with H replaced by 0.
    negative_curvature,
};

std::string_view to_string(NewtonStopReason r);

struct NewtonSolveStats {
    int cg_iterations = 0;
    double final_residual_norm = 0; ///< ‖(H + μI)p̄ − rhs‖ as tracked by CG
    double mu = 0;
    NewtonStopReason stop_reason = NewtonStopReason::zero_rhs;
};

struct NewtonSolve {
    Vector p_bar;
    NewtonSolveStats stats;
};

/// Linear operator on vectors over I⁻.
using SubspaceOperator = std::function<void(const Vector &in, Vector &out)>;

/// Truncated CG for (H + μI)p̄ = rhs. Stops at the first iterate with
/// ‖r_j‖ ≤ τ·min{μ‖p̄_j‖, ‖rhs‖}, or after max_cg iterations.
/// rhs = 0 returns p̄ = 0 without touching H. Throws NumericError on NaN.
NewtonSolve solve_newton(const SubspaceOperator &hessian, const Vector &rhs,
                         double mu, double tau, int max_cg);

/// Same, with H the masked Hessian of `oracle` at x over `minus`.
NewtonSolve solve_newton(const ProblemOracle &oracle, const Vector &x,
                         const IndexSet &minus, const Vector &rhs, double mu,
                         double tau, int max_cg);

} // namespace tmap
