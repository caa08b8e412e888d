#pragma once

#include <tmap/oracle.hpp>
#include <tmap/partition.hpp>
#include <tmap/subproblem.hpp>
#include <tmap/types.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tmap {

/// Passed to SolverConfig::on_newton_solve after every Newton subproblem.
struct NewtonSolveEvent {
    int k = 0;
    const Vector &rhs; ///< [g + ω]_{I⁻}
    const NewtonSolve &solve;
};

/// Tunables shared by the TMAP, safeguarded TMAP and proximal-gradient loops.
struct SolverConfig {
    double gamma = 1.0;          ///< ℓ1 weight γ > 0
    double eps_accuracy = 1e-2;  ///< ε, upper cap on the band width ε_k
    double sigma = 1e-4;         ///< sufficient-decrease constant in (0,1)
    double beta = 0.5;           ///< backtracking factor in (0,1)
    double tau = 0.1;            ///< inexactness of the Newton solve in (0,1)
    double c = 1e-4;             ///< μ_k scale
    double delta = 0.5;          ///< μ_k exponent in (0,1)
    double eta = 1.0;            ///< exponent on μ_k in the acceptance test, (0,1]
    double tau_th = 1e-4;        ///< safeguard switch threshold in [0,1)
    double tol = 1e-6;           ///< stop when r(x_k) ≤ tol
    int max_outer = 1000;
    int max_backtracks = 60;
    int max_cg = 100;            ///< CG cap; the effective cap is min(|I⁻|, max_cg)
    bool keep_iterates = false;  ///< store every x_k in SolveReport::iterates
    /// Optional hook for inspecting Newton solves (tests, diagnostics).
    std::function<void(const NewtonSolveEvent &)> on_newton_solve;

    /// Throws ParameterError on any out-of-range field.
    void validate() const;
};

/// One row per outer iteration k. The row describes x_k and the step taken
/// from it; the terminal row (no step) has t_k = 0 and zero step counters.
struct IterationRecord {
    int k = 0;
    double psi = 0;
    double residual_norm = 0;
    double t_k = 0;
    double mu_k = 0;
    Index minus_set_size = 0;
    int cg_iters = 0;
    std::uint64_t active_set_fingerprint = 0;
    bool used_safeguard = false;
    int backtracks = 0;

    bool operator==(const IterationRecord &) const = default;
};

enum class SolveStatus { converged, max_iters, linesearch_failure, numeric_error };

std::string_view to_string(SolveStatus s);

struct SafeguardStats {
    int switch_count = 0;
    std::vector<int> switch_iterations;
};

struct SolveReport {
    Vector x_final;
    SolveStatus status = SolveStatus::max_iters;
    std::vector<IterationRecord> trace;
    std::optional<int> identification_iter;
    double wall_time_seconds = 0;
    std::vector<Vector> iterates; ///< only with SolverConfig::keep_iterates
    SafeguardStats safeguard;
    int newton_max_iter_hits = 0; ///< CG exits without meeting the τ rule
    std::vector<std::string> warnings;
    std::string message;

    double final_residual() const {
        return trace.empty() ? 0.0 : trace.back().residual_norm;
    }
};

/// Full-length search direction: g on I⁺ (ω vanishes there), p̄ on I⁻.
Vector build_step(const Vector &g, const IndexPartition &part,
                  const Vector &p_bar);

/// x(t) = 𝒫(x − t·p).
Vector trial_point(const Vector &x, const Vector &p, double t,
                   const IndexPartition &part, double gamma);

/// Sufficient decrease:
///   ψ(x) − ψ(x(t)) ≥ σ·t·(1−τ)·μ^η·‖p̄‖² + σ·t·‖G_t‖².
/// `psi_drop` is ψ(x) − ψ(x(t)).
bool acceptance_test(double psi_drop, double t, double mu, double p_bar_norm,
                     double gmap_norm, double sigma, double tau, double eta);

/// Overload taking the two objective values.
inline bool acceptance_test(double psi_x, double psi_trial, double t, double mu,
                            double p_bar_norm, double gmap_norm, double sigma,
                            double tau, double eta) {
    return acceptance_test(psi_x - psi_trial, t, mu, p_bar_norm, gmap_norm,
                           sigma, tau, eta);
}

/// Two-metric adaptive projection: minimizes f + γ‖·‖₁ from x0.
/// config.eta is forced to 1 and the safeguard is off.
SolveReport solve(const ProblemOracle &oracle, const Vector &x0,
                  SolverConfig config);

} // namespace tmap
