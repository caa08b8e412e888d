#include <tmap/dct.hpp>
#include <tmap/generator.hpp>
#include <tmap/lasso.hpp>
#include <tmap/logistic.hpp>
#include <tmap/safeguard.hpp>
#include <tmap/solver.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace tmap;

namespace {

LassoInstance lasso_instance(Index n) {
    LassoInstanceParams p;
    p.n = n;
    p.m = n / 4;
    p.k = std::max<Index>(1, n / 40);
    return generate_lasso_instance(p);
}

} // namespace

static void BM_TmapLasso(benchmark::State &state) {
    const LassoInstance inst = lasso_instance(state.range(0));
    const LassoOracle oracle(inst.op, inst.b);
    SolverConfig cfg;
    cfg.gamma = 0.01;
    cfg.tol = 1e-10;
    int iters = 0;
    for (auto _ : state) {
        const SolveReport r = solve(oracle, Vector::Zero(inst.params.n), cfg);
        iters = static_cast<int>(r.trace.size()) - 1;
        benchmark::DoNotOptimize(r.x_final.data());
    }
    state.counters["iterations"] = iters;
}
BENCHMARK(BM_TmapLasso)->Arg(1024)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

static void BM_ProxGradLasso(benchmark::State &state) {
    const LassoInstance inst = lasso_instance(state.range(0));
    const LassoOracle oracle(inst.op, inst.b);
    SolverConfig cfg;
    cfg.gamma = 0.01;
    cfg.tol = 1e-10;
    cfg.max_outer = 1'000'000;
    for (auto _ : state) {
        const SolveReport r = solve_prox_grad(oracle, Vector::Zero(inst.params.n), cfg);
        benchmark::DoNotOptimize(r.x_final.data());
    }
}
BENCHMARK(BM_ProxGradLasso)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_Dct(benchmark::State &state) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    Vector x(state.range(0));
    for (Index i = 0; i < x.size(); ++i)
        x[i] = normal(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(dct2(x).data());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dct)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

static void BM_DctReference(benchmark::State &state) {
    Vector x = Vector::LinSpaced(state.range(0), -1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(dct2_reference(x).data());
}
BENCHMARK(BM_DctReference)->Arg(1024)->Arg(4096);

static void BM_LogisticHessvec(benchmark::State &state) {
    LogisticInstanceParams p;
    p.m = state.range(0);
    p.n = state.range(0) / 10;
    const LogisticInstance inst = generate_logistic_instance(p);
    const LogisticOracle oracle(inst.a, inst.labels);
    const Vector x = Vector::Constant(p.n, 0.01);
    const Vector v = Vector::Ones(p.n);
    const HessianProduct h = oracle.hessian_at(x);
    Vector out(p.n);
    for (auto _ : state) {
        h(v, out);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_LogisticHessvec)->Arg(500)->Arg(5000);

BENCHMARK_MAIN();
