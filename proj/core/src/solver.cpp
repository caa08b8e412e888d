#include "tmap_loop.hpp"

#include <tmap/analysis.hpp>
#include <tmap/errors.hpp>
#include <tmap/safeguard.hpp>
#include <tmap/solver.hpp>
#include <tmap/subproblem.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <string>

namespace tmap {

namespace {

void require_open_unit(double v, const char *name) {
    if (!(v > 0 && v < 1))
        throw ParameterError(std::string("SolverConfig: ") + name + " must lie in (0,1)");
}

void require_positive(double v, const char *name) {
    if (!(v > 0) || !std::isfinite(v))
        throw ParameterError(std::string("SolverConfig: ") + name + " must be positive");
}

} // namespace

void SolverConfig::validate() const {
    require_positive(gamma, "gamma");
    require_positive(eps_accuracy, "eps_accuracy");
    require_open_unit(sigma, "sigma");
    require_open_unit(beta, "beta");
    require_open_unit(tau, "tau");
    require_positive(c, "c");
    require_open_unit(delta, "delta");
    if (!(eta > 0 && eta <= 1))
        throw ParameterError("SolverConfig: eta must lie in (0,1]");
    if (!(tau_th >= 0 && tau_th < 1))
        throw ParameterError("SolverConfig: tau_th must lie in [0,1)");
    require_positive(tol, "tol");
    if (max_outer < 0 || max_backtracks < 0)
        throw ParameterError("SolverConfig: iteration limits must be nonnegative");
    if (max_cg < 1)
        throw ParameterError("SolverConfig: max_cg must be at least 1");
}

std::string_view to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iters: return "max_iters";
    case SolveStatus::linesearch_failure: return "linesearch_failure";
    case SolveStatus::numeric_error: return "numeric_error";
    }
    return "unknown";
}

Vector build_step(const Vector &g, const IndexPartition &part,
                  const Vector &p_bar) {
    require_same_size(g.size(), part.size(), "build_step");
    const IndexSet minus = part.minus();
    require_same_size(p_bar.size(), static_cast<Index>(minus.size()), "build_step p_bar");
    Vector p = g;
    scatter(p_bar, minus, p);
    return p;
}

Vector trial_point(const Vector &x, const Vector &p, double t,
                   const IndexPartition &part, double gamma) {
    require_same_size(x.size(), p.size(), "trial_point");
    return adaptive_project(x - t * p, part, t, gamma);
}

bool acceptance_test(double psi_drop, double t, double mu, double p_bar_norm,
                     double gmap_norm, double sigma, double tau, double eta) {
    const double mu_eta = std::pow(mu, eta);
    const double required = sigma * t * (1 - tau) * mu_eta * p_bar_norm * p_bar_norm +
                            sigma * t * gmap_norm * gmap_norm;
    return psi_drop >= required;
}

SolveReport solve(const ProblemOracle &oracle, const Vector &x0,
                  SolverConfig config) {
    config.eta = 1.0;
    return detail::tmap_loop(oracle, x0, config, false);
}

namespace detail {

namespace {

double gmap_norm_on(const IndexSet &plus, const Vector &x, const Vector &trial,
                    double t) {
    double sq = 0;
    for (Index i : plus) {
        const double gi = (x[i] - trial[i]) / t;
        sq += gi * gi;
    }
    return std::sqrt(sq);
}

} // namespace

SolveReport tmap_loop(const ProblemOracle &oracle, const Vector &x0,
                      const SolverConfig &config, bool safeguarded) {
    config.validate();
    require_same_size(x0.size(), oracle.dimension(), "solve: x0");
    require_finite(x0, "solve: x0");
    if (!oracle.has_hessian_vector())
        throw CapabilityError("solve: TMAP needs Hessian-vector products");

    const auto start = std::chrono::steady_clock::now();
    const double gamma = config.gamma;

    SolveReport report;
    Vector x = x0;
    Vector g;
    double psi = oracle.value_and_gradient(x, g) + l1_term(x, gamma);

    auto finish = [&](SolveStatus status, std::string message = {}) {
        report.status = status;
        report.message = std::move(message);
        report.x_final = x;
        report.identification_iter = track_identification(report.trace);
        report.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    for (int k = 0;; ++k) {
        IterationRecord rec;
        rec.k = k;
        rec.psi = psi;
        rec.active_set_fingerprint = active_set_fingerprint(x);
        if (config.keep_iterates)
            report.iterates.push_back(x);

        if (!std::isfinite(psi) || !g.allFinite()) {
            rec.residual_norm = std::numeric_limits<double>::quiet_NaN();
            report.trace.push_back(rec);
            return finish(SolveStatus::numeric_error, "objective or gradient not finite");
        }

        const StationarityResidual res = stationarity_residual(x, g, gamma);
        rec.residual_norm = res.norm;
        if (res.norm <= config.tol) {
            report.trace.push_back(rec);
            return finish(SolveStatus::converged);
        }
        if (k >= config.max_outer) {
            report.trace.push_back(rec);
            return finish(SolveStatus::max_iters);
        }

        try {
            const IndexPartition part =
                compute_partition(x, g, config.eps_accuracy, gamma, res);
            const IndexSet minus = part.minus();
            const Vector shifted = g + omega(part, gamma, x.size());
            const Vector rhs = gather(shifted, minus);
            const double mu =
                compute_mu(gather(res.vector, part.plus), rhs, config.c, config.delta);

            const int cg_cap =
                static_cast<int>(std::min<Index>(static_cast<Index>(minus.size()), config.max_cg));
            const NewtonSolve newton =
                solve_newton(oracle, x, minus, rhs, mu, config.tau, std::max(cg_cap, 1));
            if (config.on_newton_solve)
                config.on_newton_solve(NewtonSolveEvent{k, rhs, newton});
            if (newton.stats.stop_reason == NewtonStopReason::max_iters) {
                ++report.newton_max_iter_hits;
                report.warnings.push_back(
                    "k=" + std::to_string(k) + ": CG hit its cap (" +
                    std::to_string(newton.stats.cg_iterations) +
                    " iterations) before the inexactness rule was met");
            }

            const Vector p = build_step(g, part, newton.p_bar);
            const double p_bar_norm = newton.p_bar.norm();
            const double eta = safeguarded ? config.eta : 1.0;

            rec.mu_k = mu;
            rec.minus_set_size = static_cast<Index>(minus.size());
            rec.cg_iters = newton.stats.cg_iterations;

            double t = 1.0;
            bool accepted = false;
            Vector trial;
            int backtracks = 0;
            for (;;) {
                trial = trial_point(x, p, t, part, gamma);
                const double drop = composite_decrease(oracle, x, g, trial, gamma);
                if (std::isnan(drop))
                    throw NumericError("objective change is NaN at a trial point");
                const double gmap = gmap_norm_on(part.plus, x, trial, t);
                if (acceptance_test(drop, t, mu, p_bar_norm, gmap, config.sigma,
                                    config.tau, eta)) {
                    accepted = true;
                    break;
                }
                // Below the threshold the safeguard switches regardless of
                // where the search would stop, so stop reducing t here.
                if (safeguarded && t <= config.tau_th)
                    break;
                if (backtracks == config.max_backtracks)
                    break;
                t *= config.beta;
                ++backtracks;
            }
            rec.backtracks = backtracks;

            if (safeguarded && (!accepted || t <= config.tau_th)) {
                const ProxGradStep step = prox_grad_step(
                    oracle, x, g, gamma, config.sigma, config.beta, config.max_backtracks);
                rec.t_k = step.t;
                rec.backtracks += step.backtracks;
                rec.used_safeguard = true;
                ++report.safeguard.switch_count;
                report.safeguard.switch_iterations.push_back(k);
                trial = step.x_next;
            } else if (!accepted) {
                rec.t_k = t;
                report.trace.push_back(rec);
                return finish(SolveStatus::linesearch_failure,
                              "no sufficient decrease after " +
                                  std::to_string(config.max_backtracks) +
                                  " backtracks (t = " + std::to_string(t) + ")");
            } else {
                rec.t_k = t;
            }
            report.trace.push_back(rec);
            x = std::move(trial);
        } catch (const NumericError &e) {
            report.trace.push_back(rec);
            return finish(SolveStatus::numeric_error, e.what());
        } catch (const LinesearchError &e) {
            report.trace.push_back(rec);
            return finish(SolveStatus::linesearch_failure, e.what());
        }

        psi = oracle.value_and_gradient(x, g) + l1_term(x, gamma);
    }
}

} // namespace detail

} // namespace tmap
