#include "test_support.hpp"

#include <tmap/partition.hpp>
#include <tmap/prox.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tmap;
using tmap::testing::random_vector;

namespace {

const Vector kX{{5, 0.05, -0.01, 0}};
const Vector kG{{-1, 2, 0.5, -3}};

} // namespace

TEST_CASE("partition on the four-coordinate example") {
    const IndexPartition p = compute_partition(kX, kG, 0.1, 1);
    // 0-based: coordinates 2 and 3 of the 1-based listing.
    CHECK(p.plus == IndexSet{1, 2});
    CHECK(p.minus_pos == IndexSet{0, 3});
    CHECK(p.minus_neg.empty());
    CHECK(p.eps_k == 0.1);
    CHECK(p.pi == doctest::Approx(std::sqrt(5.0001)).epsilon(1e-14));
    CHECK(p.minus() == IndexSet{0, 3});
    CHECK(omega(p, 1, 4) == Vector{{1, 0, 0, 1}});
}

TEST_CASE("partition at a stationary point collapses the band") {
    const Vector x{{2, -1, 0, 0}};
    const Vector g{{-1, 1, 0.3, -0.5}};
    const IndexPartition p = compute_partition(x, g, 0.1, 1);
    CHECK(p.pi == 0);
    CHECK(p.eps_k == 0);
    CHECK(p.minus_pos == IndexSet{0});
    CHECK(p.minus_neg == IndexSet{1});
    CHECK(p.plus == IndexSet{2, 3});
}

TEST_CASE("zero iterate with small gradient is all I+") {
    const IndexPartition p = compute_partition(Vector::Zero(5), Vector{{0.1, -0.2, 0, 0.9, -0.99}}, 0.1, 1);
    CHECK(p.plus.size() == 5);
    CHECK(p.minus().empty());
    CHECK(omega(p, 1, 5) == Vector::Zero(5));
}

TEST_CASE("omega on an all-negative partition") {
    const Vector x = Vector::Constant(3, -4);
    const IndexPartition p = compute_partition(x, Vector::Zero(3), 0.01, 0.5);
    CHECK(p.minus_neg.size() == 3);
    CHECK(omega(p, 0.5, 3) == Vector::Constant(3, -0.5));
}

TEST_CASE("adaptive_project examples") {
    // Region assignment: 0 ∈ I⁻⁺, 1 ∈ I⁻⁻, 2 ∈ I⁺.
    const IndexPartition p = compute_partition(Vector{{1, -1, 0}}, Vector{{0, 0, 0}}, 0.01, 1);
    REQUIRE(p.region[0] == Region::minus_pos);
    REQUIRE(p.region[1] == Region::minus_neg);
    REQUIRE(p.region[2] == Region::plus);
    const Vector out = adaptive_project(Vector{{-0.3, 0.3, 0.8}}, p, 0.5, 1);
    CHECK(out[0] == 0);
    CHECK(out[1] == 0);
    CHECK(out[2] == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("partition properties on random draws with boundary values") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (int draw = 0; draw < 1000; ++draw) {
        const Index n = 1 + static_cast<Index>(u(rng) * 25);
        const double gamma = 0.1 + u(rng);
        const double eps = 1e-3 + 0.3 * u(rng);
        Vector x = random_vector(n, rng, 0.5);
        Vector g = random_vector(n, rng, 2 * gamma);
        for (Index i = 0; i < n; ++i) {
            const double a = u(rng), b = u(rng);
            if (a < 0.15) x[i] = 0;
            else if (a < 0.3) x[i] = (a < 0.22 ? eps : -eps);
            if (b < 0.3) g[i] = (b < 0.15 ? gamma : -gamma);
        }
        const IndexPartition p = compute_partition(x, g, eps, gamma);

        std::vector<int> hits(static_cast<std::size_t>(n), 0);
        for (const IndexSet *s : {&p.plus, &p.minus_pos, &p.minus_neg}) {
            CHECK(std::ranges::is_sorted(*s));
            for (Index i : *s)
                ++hits[static_cast<std::size_t>(i)];
        }
        CHECK(std::ranges::all_of(hits, [](int h) { return h == 1; }));
        CHECK(p.eps_k <= eps);
        CHECK(p.eps_k <= p.pi);

        const Vector w = omega(p, gamma, n);
        const Vector v = random_vector(n, rng, 2);
        const double t = 0.1 + u(rng);
        const Vector pv = adaptive_project(v, p, t, gamma);
        const Vector ppv = adaptive_project(pv, p, t, gamma);
        for (Index i = 0; i < n; ++i) {
            const Region r = p.region[static_cast<std::size_t>(i)];
            if (x[i] > p.eps_k) CHECK(r == Region::minus_pos);
            if (x[i] < -p.eps_k) CHECK(r == Region::minus_neg);
            CHECK(w[i] == (r == Region::minus_pos ? gamma : r == Region::minus_neg ? -gamma : 0.0));
            if (r == Region::minus_pos) CHECK(pv[i] >= 0);
            if (r == Region::minus_neg) CHECK(pv[i] <= 0);
            // The sign projections are idempotent; soft thresholding on I⁺ is not.
            if (r != Region::plus) CHECK(ppv[i] == pv[i]);
        }
    }
}
