#include "test_support.hpp"

#include <tmap/errors.hpp>
#include <tmap/prox.hpp>

#include <doctest.h>

#include <random>

using namespace tmap;
using tmap::testing::random_vector;

TEST_CASE("soft_threshold on the defining cases") {
    CHECK(soft_threshold(2.0, 1.0) == 1.0);
    CHECK(soft_threshold(0.5, 1.0) == 0.0);
    CHECK(soft_threshold(-3.0, 1.0) == -2.0);
    CHECK(soft_threshold(1.0, 1.0) == 0.0);
    CHECK(soft_threshold(-1.0, 1.0) == 0.0);
}

TEST_CASE("soft_threshold is nondecreasing and 1-Lipschitz") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        double a = u(rng), b = u(rng);
        const double theta = std::abs(u(rng));
        if (a > b)
            std::swap(a, b);
        CHECK(soft_threshold(a, theta) <= soft_threshold(b, theta));
        CHECK(soft_threshold(b, theta) - soft_threshold(a, theta) <= b - a);
    }
}

TEST_CASE("prox_l1 examples") {
    CHECK(prox_l1(Vector{{2, -0.5, 0}}, {1, 1}) == Vector{{1, 0, 0}});
    CHECK(prox_l1(Vector{{3, -3}}, {2, 0.5}) == Vector{{2, -2}});
    const Vector x{{0.3, -7, 1e-9}};
    CHECK(prox_l1(x, {0, 1}) == x);
}

TEST_CASE("prox_l1 rejects bad parameters and non-finite input") {
    CHECK_THROWS_AS(prox_l1(Vector{{1}}, {-1, 1}), ParameterError);
    CHECK_THROWS_AS(prox_l1(Vector{{1}}, {1, 0}), ParameterError);
}

TEST_CASE("prox_l1 is nonexpansive") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        const Vector x = random_vector(8, rng, 3);
        const Vector y = random_vector(8, rng, 3);
        const ProxParams p{std::abs(x[0]), 0.5};
        CHECK((prox_l1(x, p) - prox_l1(y, p)).norm() <= (x - y).norm() * (1 + 1e-15));
    }
}

TEST_CASE("prox scaling monotonicity for 0 < a < b") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(1e-3, 3);
    for (int i = 0; i < 1000; ++i) {
        const Vector x = random_vector(6, rng, 2);
        const Vector g = random_vector(6, rng, 2);
        const double gamma = u(rng);
        double a = u(rng), b = u(rng);
        if (a > b)
            std::swap(a, b);
        const double da = (x - prox_l1(x - a * g, {gamma, a})).norm();
        const double db = (x - prox_l1(x - b * g, {gamma, b})).norm();
        CHECK(da / a >= db / b - 1e-12);
        CHECK(da <= db + 1e-12);
    }
}

TEST_CASE("stationarity_residual examples") {
    CHECK(stationarity_residual(Vector{{0}}, Vector{{0.5}}, 1).norm == 0);
    CHECK(stationarity_residual(Vector{{2}}, Vector{{-1}}, 1).norm == 0);
    const auto r = stationarity_residual(Vector{{2}}, Vector{{0}}, 1);
    CHECK(r.vector == Vector{{1}});
    CHECK(r.norm == 1);
    CHECK_THROWS_AS(stationarity_residual(Vector{{1, 2}}, Vector{{1}}, 1), DimensionError);
}

TEST_CASE("stationarity_residual vanishes on constructed stationary points") {
    // x_i > 0 with g_i = −γ, x_i < 0 with g_i = γ, x_i = 0 with |g_i| ≤ γ.
    // Dyadic values keep x ∓ γ exact.
    std::mt19937_64 rng(4);
    const auto u = [&rng] { return static_cast<double>(static_cast<int>(rng() % 17) - 8) / 8; };
    std::uniform_int_distribution<int> kind(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const double gamma = 0.25 * (1 + trial % 7);
        Vector x(10), g(10);
        for (Index i = 0; i < 10; ++i) {
            switch (kind(rng)) {
            case 0: x[i] = 1 + std::abs(u()); g[i] = -gamma; break;
            case 1: x[i] = -1 - std::abs(u()); g[i] = gamma; break;
            default: x[i] = 0; g[i] = gamma * u(); break;
            }
        }
        CHECK(stationarity_residual(x, g, gamma).norm == 0);
        // Nudging one gradient entry off its stationary value breaks it.
        g[trial % 10] += 3 * gamma;
        CHECK(stationarity_residual(x, g, gamma).norm > 0);
    }
}

TEST_CASE("gradient_map examples") {
    CHECK(gradient_map(Vector{{0}}, Vector{{0.2}}, 1, 1) == Vector{{0}});
    CHECK(gradient_map(Vector{{0.05}}, Vector{{2}}, 1, 1)[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gradient_map(Vector{{1}}, Vector{{0}}, 0.5, 1) == Vector{{1.0}});
    CHECK_THROWS_AS(gradient_map(Vector{{1}}, Vector{{0}}, 0, 1), ParameterError);
}
