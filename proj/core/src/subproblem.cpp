#include <tmap/errors.hpp>
#include <tmap/subproblem.hpp>

#include <algorithm>
#include <cmath>

namespace tmap {

double compute_mu(const Vector &residual_plus, const Vector &shifted_grad_minus,
                  double c, double delta) {
    const double sq = residual_plus.squaredNorm() + shifted_grad_minus.squaredNorm();
    return c * std::pow(std::sqrt(sq), delta);
}

MaskedHessian::MaskedHessian(const ProblemOracle &oracle, const Vector &x,
                             IndexSet minus)
    : product_{oracle.hessian_at(x)}, minus_{std::move(minus)},
      n_{oracle.dimension()}, full_in_{Vector::Zero(n_)} {}

void MaskedHessian::apply(const Vector &v_bar, Vector &out) const {
    require_same_size(v_bar.size(), size(), "masked_hessvec");
    // full_in_ is zero off I⁻ and every call overwrites all of I⁻.
    scatter(v_bar, minus_, full_in_);
    product_(full_in_, full_out_);
    out = gather(full_out_, minus_);
}

Vector masked_hessvec(const ProblemOracle &oracle, const Vector &x,
                      const IndexSet &minus, const Vector &v_bar) {
    Vector out;
    MaskedHessian(oracle, x, minus).apply(v_bar, out);
    return out;
}

std::string_view to_string(NewtonStopReason r) {
    switch (r) {
    case NewtonStopReason::tolerance_met: return "tolerance_met";
    case NewtonStopReason::max_iters: return "max_iters";
    case NewtonStopReason::zero_rhs: return "zero_rhs";
    case NewtonStopReason::negative_curvature: return "negative_curvature";
    }
    return "unknown";
}

NewtonSolve solve_newton(const SubspaceOperator &hessian, const Vector &rhs,
                         double mu, double tau, int max_cg) {
    NewtonSolve out;
    out.stats.mu = mu;
    const Index dim = rhs.size();
    out.p_bar = Vector::Zero(dim);

    const double rhs_norm = rhs.norm();
    if (!std::isfinite(rhs_norm))
        throw NumericError("solve_newton: right-hand side is not finite");
    if (rhs_norm == 0) {
        out.stats.stop_reason = NewtonStopReason::zero_rhs;
        return out;
    }
    if (!(mu > 0))
        throw ParameterError("solve_newton: mu must be positive for a nonzero rhs");

    Vector r = rhs; // rhs − (H + μI)p
    Vector d = r;
    Vector hd(dim);
    double rr = r.squaredNorm();

    out.stats.stop_reason = NewtonStopReason::max_iters;
    out.stats.final_residual_norm = rhs_norm;
    for (int j = 0; j < max_cg; ++j) {
        hessian(d, hd);
        hd += mu * d;
        const double curvature = d.dot(hd);
        if (!std::isfinite(curvature))
            throw NumericError("solve_newton: Hessian product is not finite");
        if (curvature <= 0) {
            out.p_bar = rhs / mu;
            out.stats.cg_iterations = j + 1;
            out.stats.final_residual_norm = 0;
            out.stats.stop_reason = NewtonStopReason::negative_curvature;
            return out;
        }
        const double alpha = rr / curvature;
        out.p_bar += alpha * d;
        r -= alpha * hd;
        const double rr_next = r.squaredNorm();
        out.stats.cg_iterations = j + 1;
        out.stats.final_residual_norm = std::sqrt(rr_next);
        if (out.stats.final_residual_norm <=
            tau * std::min(mu * out.p_bar.norm(), rhs_norm)) {
            out.stats.stop_reason = NewtonStopReason::tolerance_met;
            return out;
        }
        d = r + (rr_next / rr) * d;
        rr = rr_next;
    }
    return out;
}

NewtonSolve solve_newton(const ProblemOracle &oracle, const Vector &x,
                         const IndexSet &minus, const Vector &rhs, double mu,
                         double tau, int max_cg) {
    require_same_size(rhs.size(), static_cast<Index>(minus.size()), "solve_newton");
    if (rhs.isZero(0)) {
        NewtonSolve out;
        out.p_bar = Vector::Zero(rhs.size());
        out.stats.mu = mu;
        out.stats.stop_reason = NewtonStopReason::zero_rhs;
        return out;
    }
    const MaskedHessian h(oracle, x, minus);
    return solve_newton([&h](const Vector &in, Vector &o) { h.apply(in, o); },
                        rhs, mu, tau, max_cg);
}

} // namespace tmap
