#include "test_support.hpp"

#include <tmap/analysis.hpp>
#include <tmap/errors.hpp>
#include <tmap/generator.hpp>
#include <tmap/lasso.hpp>
#include <tmap/linear_operator.hpp>
#include <tmap/partition.hpp>
#include <tmap/safeguard.hpp>
#include <tmap/smooth_models.hpp>
#include <tmap/solver.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tmap;
using tmap::testing::random_vector;

namespace {

std::shared_ptr<DenseOperator> dense(const Eigen::MatrixXd &a) {
    return std::make_shared<DenseOperator>(a);
}

} // namespace

TEST_CASE("build_step assembles g on I+ and p_bar on I-") {
    const Vector x{{5, 0.05, -0.01, 0}};
    const Vector g{{-1, 2, 0.5, -3}};
    const IndexPartition part = compute_partition(x, g, 0.1, 1);
    const Vector p = build_step(g, part, Vector{{7, 9}});
    CHECK(p == Vector{{7, 2, 0.5, 9}});

    const IndexPartition all_plus = compute_partition(Vector::Zero(3), Vector{{0.1, 0.2, -0.3}}, 0.1, 1);
    CHECK(build_step(Vector{{0.1, 0.2, -0.3}}, all_plus, Vector(0)) == Vector{{0.1, 0.2, -0.3}});

    const IndexPartition all_minus = compute_partition(Vector{{4, -4}}, Vector::Zero(2), 0.1, 1);
    CHECK(build_step(Vector::Zero(2), all_minus, Vector{{1, 2}}) == Vector{{1, 2}});
}

TEST_CASE("trial_point examples") {
    const Vector x{{3, -2}};
    const IndexPartition part = compute_partition(x, Vector::Zero(2), 0.01, 1);
    CHECK(trial_point(x, Vector::Zero(2), 1, part, 1) == x);
    CHECK(trial_point(x, Vector{{4, 0}}, 1, part, 1) == Vector{{0, -2}});

    const IndexPartition plus = compute_partition(Vector{{0}}, Vector{{0.1}}, 0.01, 1);
    CHECK(trial_point(Vector{{0.8}}, Vector{{0}}, 0.5, plus, 1)[0] == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("acceptance_test uses a non-strict inequality") {
    // With μ = 0 the right-hand side is σ·t·‖G‖² = 0.25 here.
    CHECK(acceptance_test(1.0, 1, 0, 0, 0.5, 1, 0.1, 1));
    CHECK_FALSE(acceptance_test(0.0, 1, 0, 0, 0.5, 1, 0.1, 1));
    CHECK(acceptance_test(0.25, 1, 0, 0, 0.5, 1, 0.1, 1));
    CHECK_FALSE(acceptance_test(std::nextafter(0.25, 0.0), 1, 0, 0, 0.5, 1, 0.1, 1));
    // Newton part: σ·t·(1−τ)·μ^η·‖p̄‖² = 0.5·1·0.5·0.25·4 = 0.25 with η = 0.5.
    CHECK(acceptance_test(0.25, 1, 0.0625, 2, 0, 0.5, 0.5, 0.5));
    CHECK_FALSE(acceptance_test(0.2, 1, 0.0625, 2, 0, 0.5, 0.5, 0.5));
}

TEST_CASE("solve: A = I LASSO has the soft-thresholded minimizer") {
    const LassoOracle oracle(dense(Eigen::MatrixXd::Identity(2, 2)), Vector{{3, 0.5}});
    SolverConfig cfg;
    cfg.gamma = 1;
    cfg.tol = 1e-12;
    const SolveReport r = solve(oracle, Vector::Zero(2), cfg);
    CHECK(r.status == SolveStatus::converged);
    CHECK((r.x_final - Vector{{2, 0}}).norm() <= 1e-8);
}

TEST_CASE("solve: stationary start returns immediately") {
    const LassoOracle oracle(dense(Eigen::MatrixXd::Identity(2, 2)), Vector{{3, 0.5}});
    SolverConfig cfg;
    cfg.gamma = 1;
    const SolveReport r = solve(oracle, Vector{{2, 0}}, cfg);
    CHECK(r.status == SolveStatus::converged);
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].k == 0);
    CHECK(r.trace[0].residual_norm == 0);
    CHECK(r.identification_iter == 0);
}

TEST_CASE("solve: random 50x200 LASSO against the proximal-gradient baseline") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd a(50, 200);
    for (Index i = 0; i < a.size(); ++i)
        a.data()[i] = normal(rng) / std::sqrt(50.0);
    const LassoOracle oracle(dense(a), random_vector(50, rng));
    SolverConfig cfg;
    cfg.gamma = 0.05;
    cfg.tol = 1e-10;
    cfg.keep_iterates = true;
    const SolveReport r = solve(oracle, Vector::Zero(200), cfg);
    REQUIRE(r.status == SolveStatus::converged);
    CHECK(r.final_residual() <= 1e-10);

    SolverConfig base = cfg;
    base.tol = 1e-12;
    base.max_outer = 1'000'000;
    base.keep_iterates = false;
    const SolveReport b = solve_prox_grad(oracle, Vector::Zero(200), base);
    REQUIRE(b.status == SolveStatus::converged);
    CHECK(r.trace.back().psi <= b.trace.back().psi + 1e-8);

    SUBCASE("trace contracts") {
        REQUIRE(r.iterates.size() == r.trace.size());
        for (std::size_t k = 0; k < r.trace.size(); ++k) {
            const IterationRecord &row = r.trace[k];
            CHECK(row.k == static_cast<int>(k));
            CHECK(row.residual_norm >= 0);
            CHECK(row.active_set_fingerprint == active_set_fingerprint(r.iterates[k]));
            if (k + 1 < r.trace.size()) {
                CHECK(row.t_k > 0);
                CHECK(row.t_k <= 1);
                // Signs are kept on I⁻ blocks.
                Vector g;
                oracle.value_and_gradient(r.iterates[k], g);
                const IndexPartition part = compute_partition(r.iterates[k], g, cfg.eps_accuracy, cfg.gamma);
                for (Index i : part.minus_pos)
                    CHECK(r.iterates[k + 1][i] >= 0);
                for (Index i : part.minus_neg)
                    CHECK(r.iterates[k + 1][i] <= 0);
            } else {
                CHECK(row.t_k == 0);
            }
        }
        CHECK(r.iterates.back() == r.x_final);
    }
}

TEST_CASE("solve: status reporting") {
    LassoInstanceParams p;
    p.n = 256;
    p.m = 64;
    p.k = 6;
    const LassoInstance inst = generate_lasso_instance(p);
    const LassoOracle oracle(inst.op, inst.b);
    SolverConfig cfg;
    cfg.gamma = 0.01;
    cfg.tol = 1e-12;
    cfg.max_outer = 2;
    const SolveReport r = solve(oracle, Vector::Zero(p.n), cfg);
    CHECK(r.status == SolveStatus::max_iters);
    CHECK(r.trace.size() == 3);
    CHECK(r.final_residual() > cfg.tol);

    cfg.max_outer = 1000;
    cfg.max_backtracks = 0;
    cfg.sigma = 0.99;
    const SolveReport lf = solve(oracle, Vector::Zero(p.n), cfg);
    CHECK(lf.status == SolveStatus::linesearch_failure);
    CHECK_FALSE(lf.message.empty());

    CHECK_THROWS_AS(solve(oracle, Vector::Zero(p.n + 1), cfg), DimensionError);
    SolverConfig bad;
    bad.tau = 1.5;
    CHECK_THROWS_AS(solve(oracle, Vector::Zero(p.n), bad), ParameterError);
}

TEST_CASE("solve: seeded runs are deterministic and tighter tolerances do not loosen") {
    LassoInstanceParams p;
    p.seed = 4;
    const LassoInstance inst = generate_lasso_instance(p);
    const LassoOracle oracle(inst.op, inst.b);
    SolverConfig cfg;
    cfg.gamma = 0.01;
    const SolveReport a = solve(oracle, Vector::Zero(p.n), cfg);
    const SolveReport b = solve(oracle, Vector::Zero(p.n), cfg);
    CHECK(a.trace == b.trace);
    CHECK(a.x_final == b.x_final);

    double prev = std::numeric_limits<double>::infinity();
    for (double tol : {1e-6, 1e-8, 1e-10}) {
        cfg.tol = tol;
        const SolveReport r = solve(oracle, Vector::Zero(p.n), cfg);
        CHECK(r.status == SolveStatus::converged);
        CHECK(r.final_residual() <= prev);
        prev = r.final_residual();
    }
}

TEST_CASE("solve: every Newton solve is reported to the hook") {
    const QuadraticOracle oracle(Eigen::MatrixXd::Identity(3, 3) * 2, Vector{{4, -4, 0.1}});
    SolverConfig cfg;
    cfg.gamma = 0.5;
    cfg.tol = 1e-12;
    int events = 0;
    cfg.on_newton_solve = [&](const NewtonSolveEvent &ev) {
        ++events;
        CHECK(ev.rhs.size() == ev.solve.p_bar.size());
    };
    const SolveReport r = solve(oracle, Vector::Zero(3), cfg);
    CHECK(r.status == SolveStatus::converged);
    CHECK(events == static_cast<int>(r.trace.size()) - 1);
    CHECK((r.x_final - Vector{{1.75, -1.75, 0}}).norm() <= 1e-10);
}
