#include "tmap_loop.hpp"

#include <tmap/analysis.hpp>
#include <tmap/errors.hpp>
#include <tmap/prox.hpp>
#include <tmap/safeguard.hpp>

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace tmap {

ProxGradStep prox_grad_step(const ProblemOracle &oracle, const Vector &x,
                            const Vector &g, double gamma, double sigma,
                            double beta, int max_backtracks) {
    require_same_size(x.size(), g.size(), "prox_grad_step");
    ProxGradStep step;
    double t = 1.0;
    for (int bt = 0;; ++bt) {
        Vector next = prox_l1(x - t * g, {gamma, t});
        const double drop = composite_decrease(oracle, x, g, next, gamma);
        if (std::isnan(drop))
            throw NumericError("prox_grad_step: objective change is NaN");
        const double moved_sq = (x - next).squaredNorm();
        // σ·t·‖(x − x⁺)/t‖² = σ‖x − x⁺‖²/t
        if (drop >= sigma * moved_sq / t) {
            step.x_next = std::move(next);
            step.t = t;
            step.psi_drop = drop;
            step.backtracks = bt;
            return step;
        }
        if (bt == max_backtracks)
            throw LinesearchError("prox_grad_step: no sufficient decrease after " +
                                  std::to_string(max_backtracks) + " backtracks");
        t *= beta;
    }
}

ProxGradStep prox_grad_step(const ProblemOracle &oracle, const Vector &x,
                            double gamma, double sigma, double beta,
                            int max_backtracks) {
    Vector g;
    oracle.value_and_gradient(x, g);
    return prox_grad_step(oracle, x, g, gamma, sigma, beta, max_backtracks);
}

SolveReport solve_safeguarded(const ProblemOracle &oracle, const Vector &x0,
                              const SolverConfig &config) {
    return detail::tmap_loop(oracle, x0, config, true);
}

SolveReport solve_prox_grad(const ProblemOracle &oracle, const Vector &x0,
                            const SolverConfig &config) {
    config.validate();
    require_same_size(x0.size(), oracle.dimension(), "solve_prox_grad: x0");
    require_finite(x0, "solve_prox_grad: x0");

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
        rec.residual_norm = stationarity_residual(x, g, gamma).norm;
        if (rec.residual_norm <= config.tol) {
            report.trace.push_back(rec);
            return finish(SolveStatus::converged);
        }
        if (k >= config.max_outer) {
            report.trace.push_back(rec);
            return finish(SolveStatus::max_iters);
        }
        try {
            ProxGradStep step = prox_grad_step(oracle, x, g, gamma, config.sigma,
                                               config.beta, config.max_backtracks);
            rec.t_k = step.t;
            rec.backtracks = step.backtracks;
            report.trace.push_back(rec);
            x = std::move(step.x_next);
        } catch (const LinesearchError &e) {
            report.trace.push_back(rec);
            return finish(SolveStatus::linesearch_failure, e.what());
        } catch (const NumericError &e) {
            report.trace.push_back(rec);
            return finish(SolveStatus::numeric_error, e.what());
        }
        psi = oracle.value_and_gradient(x, g) + l1_term(x, gamma);
    }
}

} // namespace tmap
