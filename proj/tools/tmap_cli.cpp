// Command-line driver: load or generate a problem, run one solver, write the
// per-iteration trace and print a summary.

#include <tmap/run.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
    CLI::App app{"Two-metric adaptive projection solver for f(x) + gamma*||x||_1"};

    tmap::RunSpec spec;
    std::string problem = "synthetic_lasso";
    std::string solver = "tmap";
    std::string data, out, instance;
    double gamma = 0;
    auto &cfg = spec.config;

    app.add_option("--problem", problem,
                   "logistic | lasso | synthetic_lasso | synthetic_logistic")
        ->capture_default_str();
    app.add_option("--data", data,
                   "LIBSVM file for logistic/lasso (relative paths resolve against $TMAP_DATA_DIR)");
    app.add_option("--n-features", spec.n_override, "Override the LIBSVM column count");
    app.add_option("--solver", solver, "tmap | tmap-safe | prox-grad")->capture_default_str();
    auto *gamma_opt = app.add_option(
        "--gamma", gamma, "l1 weight (default: 1/m for logistic, 0.01 for lasso)");
    app.add_option("--tol", cfg.tol, "Stop when r(x) <= tol")->capture_default_str();
    app.add_option("--eps", cfg.eps_accuracy, "Accuracy level capping the band width")
        ->capture_default_str();
    app.add_option("--sigma", cfg.sigma, "Sufficient-decrease constant")->capture_default_str();
    app.add_option("--beta", cfg.beta, "Backtracking factor")->capture_default_str();
    app.add_option("--tau", cfg.tau, "Newton solve inexactness")->capture_default_str();
    app.add_option("--c", cfg.c, "Regularization scale for mu")->capture_default_str();
    app.add_option("--delta", cfg.delta, "Regularization exponent for mu")->capture_default_str();
    app.add_option("--eta", cfg.eta, "Exponent on mu in the safeguarded test")
        ->capture_default_str();
    app.add_option("--tau-th", cfg.tau_th, "Safeguard step threshold")->capture_default_str();
    app.add_option("--max-iters", cfg.max_outer, "Outer iteration limit")->capture_default_str();
    app.add_option("--max-backtracks", cfg.max_backtracks,
                   "Step reductions before a linesearch failure")
        ->capture_default_str();
    app.add_option("--max-cg", cfg.max_cg, "CG iteration cap")->capture_default_str();

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "Generator seed")->capture_default_str();
    app.add_option("--n", spec.lasso.n, "Signal length (synthetic lasso)")->capture_default_str();
    app.add_option("--m", spec.lasso.m, "Measurements (synthetic lasso)")->capture_default_str();
    app.add_option("--k", spec.lasso.k, "Nonzeros in the planted signal")->capture_default_str();
    app.add_option("--dynamic-range", spec.lasso.dynamic_range_db, "Dynamic range in dB")
        ->capture_default_str();
    app.add_option("--noise", spec.lasso.noise_sigma, "Measurement noise standard deviation")
        ->capture_default_str();
    app.add_option("--samples", spec.logistic.m, "Samples (synthetic logistic)")
        ->capture_default_str();
    app.add_option("--features", spec.logistic.n, "Features (synthetic logistic)")
        ->capture_default_str();

    app.add_option("--out", out, "Trace CSV output path");
    app.add_option("--write-instance", instance, "Write the generated lasso instance here");
    app.add_flag("--order", spec.estimate_order,
                 "Estimate the convergence order from the last 4 iterates "
                 "(x* from a run at tol*1e-4)");

    try {
        app.parse(argc, argv);
        spec.problem = tmap::parse_problem_kind(problem);
        spec.solver = tmap::parse_solver_kind(solver);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : static_cast<int>(tmap::ExitCode::usage);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(tmap::ExitCode::usage);
    }

    spec.gamma_given = gamma_opt->count() > 0;
    cfg.gamma = gamma;
    spec.lasso.seed = seed;
    spec.logistic.seed = seed;
    spec.data_path = data;
    spec.trace_path = out;
    spec.instance_path = instance;

    const tmap::RunOutcome outcome = tmap::run(spec, std::cout);
    if (!outcome.error.empty())
        std::cerr << "error: " << outcome.error << '\n';
    return static_cast<int>(outcome.code);
}
