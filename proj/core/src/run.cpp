#include <tmap/analysis.hpp>
#include <tmap/errors.hpp>
#include <tmap/lasso.hpp>
#include <tmap/libsvm.hpp>
#include <tmap/logistic.hpp>
#include <tmap/run.hpp>
#include <tmap/safeguard.hpp>
#include <tmap/trace.hpp>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>

namespace tmap {

namespace {

struct LoadedProblem {
    std::unique_ptr<ProblemOracle> oracle;
    double default_gamma = 0.01;
    Index samples = 0;
    std::string description;
};

LoadedProblem load_problem(const RunSpec &spec) {
    LoadedProblem lp;
    switch (spec.problem) {
    case ProblemKind::logistic: {
        auto data = parse_libsvm(resolve_data_path(spec.data_path), LabelMode::binary,
                                 spec.n_override);
        auto a = std::make_shared<const SparseRowMatrix>(std::move(data.matrix));
        lp.samples = a->rows();
        lp.default_gamma = 1.0 / static_cast<double>(a->rows());
        lp.description = "logistic m=" + std::to_string(a->rows()) +
                         " n=" + std::to_string(a->cols()) + " nnz=" + std::to_string(a->nnz());
        lp.oracle = std::make_unique<LogisticOracle>(std::move(a), std::move(data.labels));
        break;
    }
    case ProblemKind::lasso: {
        auto data = parse_libsvm(resolve_data_path(spec.data_path), LabelMode::real,
                                 spec.n_override);
        auto a = std::make_shared<const SparseRowMatrix>(std::move(data.matrix));
        lp.samples = a->rows();
        lp.description = "lasso m=" + std::to_string(a->rows()) +
                         " n=" + std::to_string(a->cols()) + " nnz=" + std::to_string(a->nnz());
        lp.oracle = std::make_unique<LassoOracle>(std::make_shared<const SparseOperator>(a),
                                                  std::move(data.labels));
        break;
    }
    case ProblemKind::synthetic_lasso: {
        LassoInstance inst = generate_lasso_instance(spec.lasso);
        if (!spec.instance_path.empty()) {
            std::ofstream os(spec.instance_path);
            if (!os)
                throw IoError("cannot write " + spec.instance_path.string());
            write_lasso_instance(os, inst);
        }
        const auto &p = spec.lasso;
        lp.samples = p.m;
        lp.description = "synthetic lasso n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) +
                         " k=" + std::to_string(p.k) + " seed=" + std::to_string(p.seed);
        lp.oracle = std::make_unique<LassoOracle>(inst.op, std::move(inst.b));
        break;
    }
    case ProblemKind::synthetic_logistic: {
        LogisticInstance inst = generate_logistic_instance(spec.logistic);
        lp.samples = inst.a->rows();
        lp.default_gamma = 1.0 / static_cast<double>(inst.a->rows());
        lp.description = "synthetic logistic m=" + std::to_string(inst.a->rows()) +
                         " n=" + std::to_string(inst.a->cols()) +
                         " seed=" + std::to_string(spec.logistic.seed);
        lp.oracle = std::make_unique<LogisticOracle>(inst.a, std::move(inst.labels));
        break;
    }
    }
    return lp;
}

SolveReport dispatch(SolverKind kind, const ProblemOracle &oracle, const Vector &x0,
                     const SolverConfig &config) {
    switch (kind) {
    case SolverKind::tmap: return solve(oracle, x0, config);
    case SolverKind::tmap_safe: return solve_safeguarded(oracle, x0, config);
    case SolverKind::prox_grad: return solve_prox_grad(oracle, x0, config);
    }
    throw ParameterError("unknown solver");
}

ExitCode exit_code_for(SolveStatus s) {
    switch (s) {
    case SolveStatus::converged: return ExitCode::converged;
    case SolveStatus::max_iters: return ExitCode::max_iters;
    case SolveStatus::linesearch_failure: return ExitCode::linesearch_failure;
    case SolveStatus::numeric_error: return ExitCode::numeric;
    }
    return ExitCode::numeric;
}

const char *solver_name(SolverKind k) {
    switch (k) {
    case SolverKind::tmap: return "tmap";
    case SolverKind::tmap_safe: return "tmap-safe";
    case SolverKind::prox_grad: return "prox-grad";
    }
    return "?";
}

} // namespace

ProblemKind parse_problem_kind(const std::string &s) {
    if (s == "logistic")
        return ProblemKind::logistic;
    if (s == "lasso")
        return ProblemKind::lasso;
    if (s == "synthetic_lasso" || s == "synthetic-lasso")
        return ProblemKind::synthetic_lasso;
    if (s == "synthetic_logistic" || s == "synthetic-logistic")
        return ProblemKind::synthetic_logistic;
    throw ParameterError("unknown problem '" + s + "'");
}

SolverKind parse_solver_kind(const std::string &s) {
    if (s == "tmap")
        return SolverKind::tmap;
    if (s == "tmap-safe" || s == "tmap_safe")
        return SolverKind::tmap_safe;
    if (s == "prox-grad" || s == "prox_grad")
        return SolverKind::prox_grad;
    throw ParameterError("unknown solver '" + s + "'");
}

std::filesystem::path resolve_data_path(const std::filesystem::path &p) {
    if (p.empty())
        throw ParameterError("--data is required for file-backed problems");
    if (p.is_relative()) {
        if (const char *dir = std::getenv("TMAP_DATA_DIR"); dir != nullptr && *dir != '\0')
            return std::filesystem::path(dir) / p;
    }
    return p;
}

RunOutcome run(const RunSpec &spec, std::ostream &out) {
    RunOutcome outcome;
    try {
        LoadedProblem lp = load_problem(spec);
        SolverConfig config = spec.config;
        if (!spec.gamma_given)
            config.gamma = lp.default_gamma;
        if (spec.estimate_order)
            config.keep_iterates = true;

        const Vector x0 = Vector::Zero(lp.oracle->dimension());
        SolveReport report = dispatch(spec.solver, *lp.oracle, x0, config);

        if (!spec.trace_path.empty()) {
            std::ofstream os(spec.trace_path);
            if (!os)
                throw IoError("cannot write " + spec.trace_path.string());
            write_trace(os, report);
        }

        const Index nnz = report.x_final.size() - static_cast<Index>(active_set(report.x_final).size());
        out << "problem:              " << lp.description << '\n'
            << "solver:               " << solver_name(spec.solver) << '\n'
            << "gamma:                " << format_double(config.gamma) << '\n'
            << "status:               " << to_string(report.status) << '\n'
            << "iterations:           " << report.trace.size() - 1 << '\n'
            << "final residual:       " << format_double(report.final_residual()) << '\n'
            << "objective:            " << format_double(report.trace.back().psi) << '\n'
            << "nonzeros:             " << nnz << " / " << report.x_final.size() << '\n'
            << "identification iter:  "
            << (report.identification_iter ? std::to_string(*report.identification_iter) : "none")
            << '\n'
            << "wall time (s):        " << format_double(report.wall_time_seconds) << '\n';
        if (spec.solver == SolverKind::tmap_safe)
            out << "safeguard switches:   " << report.safeguard.switch_count << '\n';
        if (report.newton_max_iter_hits > 0)
            out << "warning: CG reached its cap on " << report.newton_max_iter_hits
                << " iteration(s)\n";
        if (!report.message.empty())
            out << "note: " << report.message << '\n';

        if (spec.estimate_order && report.status == SolveStatus::converged) {
            SolverConfig tight = config;
            tight.tol = config.tol * 1e-4;
            tight.keep_iterates = false;
            const SolveReport reference = dispatch(spec.solver, *lp.oracle, x0, tight);
            try {
                const RateEstimate est =
                    estimate_rate(report.iterates, reference.x_final, 4);
                outcome.order = est.order;
                out << "convergence order:    " << format_double(est.order)
                    << (est.superlinear ? " (superlinear)" : "") << '\n';
            } catch (const InsufficientDataError &e) {
                out << "convergence order:    n/a (" << e.what() << ")\n";
            }
        }

        outcome.code = exit_code_for(report.status);
        outcome.report = std::move(report);
    } catch (const ParseError &e) {
        outcome.code = ExitCode::data;
        outcome.error = e.what();
    } catch (const DataError &e) {
        outcome.code = ExitCode::data;
        outcome.error = e.what();
    } catch (const IoError &e) {
        outcome.code = ExitCode::io;
        outcome.error = e.what();
    } catch (const NumericError &e) {
        outcome.code = ExitCode::numeric;
        outcome.error = e.what();
    } catch (const Error &e) {
        outcome.code = ExitCode::usage;
        outcome.error = e.what();
    }
    return outcome;
}

} // namespace tmap
