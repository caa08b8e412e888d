#pragma once

#include <tmap/oracle.hpp>
#include <tmap/solver.hpp>

namespace tmap {

struct ProxGradStep {
    Vector x_next;
    double t = 1;
    double psi_drop = 0; ///< ψ(x) − ψ(x_next)
    int backtracks = 0;
};

/// One backtracking proximal-gradient step from x with t ∈ {1, β, β², …}:
/// x_next = prox_{tγ‖·‖₁}(x − t∇f(x)), the first t with
/// ψ(x) − ψ(x_next) ≥ σ·t·‖(x − x_next)/t‖². Throws LinesearchError after
/// max_backtracks reductions.
ProxGradStep prox_grad_step(const ProblemOracle &oracle, const Vector &x,
                            const Vector &g, double gamma, double sigma,
                            double beta, int max_backtracks = 60);

/// Overload that evaluates ∇f(x) itself.
ProxGradStep prox_grad_step(const ProblemOracle &oracle, const Vector &x,
                            double gamma, double sigma, double beta,
                            int max_backtracks = 60);

/// TMAP with μ^η in the acceptance test and a switch to prox_grad_step
/// whenever the accepted step length is ≤ τ_th.
SolveReport solve_safeguarded(const ProblemOracle &oracle, const Vector &x0,
                              const SolverConfig &config);

/// Plain backtracking proximal gradient with the same stopping rule and trace
/// layout. Used as a baseline and by the CLI.
SolveReport solve_prox_grad(const ProblemOracle &oracle, const Vector &x0,
                            const SolverConfig &config);

} // namespace tmap
