#pragma once

#include <tmap/generator.hpp>
#include <tmap/solver.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace tmap {

enum class ProblemKind { logistic, lasso, synthetic_lasso, synthetic_logistic };
enum class SolverKind { tmap, tmap_safe, prox_grad };

/// Distinct process exit codes per outcome class.
enum class ExitCode : int {
    converged = 0,
    usage = 1,
    data = 2,
    max_iters = 3,
    linesearch_failure = 4,
    numeric = 5,
    io = 6,
};

struct RunSpec {
    ProblemKind problem = ProblemKind::synthetic_lasso;
    std::filesystem::path data_path;      ///< for logistic / lasso
    Index n_override = 0;                 ///< LIBSVM column count override
    LassoInstanceParams lasso;            ///< for synthetic_lasso
    LogisticInstanceParams logistic;      ///< for synthetic_logistic
    SolverKind solver = SolverKind::tmap;
    SolverConfig config;
    bool gamma_given = false;             ///< false: problem default (1/m or 0.01)
    std::filesystem::path trace_path;     ///< empty: no trace file
    std::filesystem::path instance_path;  ///< synthetic_lasso sidecar output
    bool estimate_order = false;          ///< rerun at tol·1e-4 and estimate q from the last 4 errors
};

struct RunOutcome {
    ExitCode code = ExitCode::converged;
    std::optional<SolveReport> report;
    std::optional<double> order;
    std::string error;
};

ProblemKind parse_problem_kind(const std::string &s);
SolverKind parse_solver_kind(const std::string &s);

/// Resolves a relative data path against $TMAP_DATA_DIR when it is set.
std::filesystem::path resolve_data_path(const std::filesystem::path &p);

/// Loads or generates the problem, runs the solver, writes the trace and
/// prints a human-readable summary to `out`. Errors are caught and mapped to
/// exit codes; the message goes to RunOutcome::error.
RunOutcome run(const RunSpec &spec, std::ostream &out);

} // namespace tmap
