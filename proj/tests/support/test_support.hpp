#pragma once

// Independent numerical oracles used to check the library: central finite
// differences, dense reference solves and random draws.

#include <tmap/oracle.hpp>
#include <tmap/types.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace tmap::testing {

inline Vector random_vector(Index n, std::mt19937_64 &rng, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale);
    Vector v(n);
    for (Index i = 0; i < n; ++i)
        v[i] = normal(rng);
    return v;
}

inline Eigen::MatrixXd random_spd(Index n, std::mt19937_64 &rng, double shift = 0.1) {
    Eigen::MatrixXd b(n, n);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            b(i, j) = normal(rng);
    return b.transpose() * b + shift * Eigen::MatrixXd::Identity(n, n);
}

/// Central-difference gradient of oracle.value.
inline Vector fd_gradient(const ProblemOracle &oracle, const Vector &x, double h = 1e-6) {
    Vector g(x.size());
    Vector xp = x, xm = x;
    for (Index i = 0; i < x.size(); ++i) {
        xp[i] = x[i] + h;
        xm[i] = x[i] - h;
        g[i] = (oracle.value(xp) - oracle.value(xm)) / (2 * h);
        xp[i] = xm[i] = x[i];
    }
    return g;
}

/// Central difference of the gradient along v: (∇f(x + hv) − ∇f(x − hv)) / 2h.
inline Vector fd_hessvec(const ProblemOracle &oracle, const Vector &x, const Vector &v,
                         double h = 1e-5) {
    Vector gp, gm;
    oracle.value_and_gradient(x + h * v, gp);
    oracle.value_and_gradient(x - h * v, gm);
    return (gp - gm) / (2 * h);
}

/// ‖approx − exact‖ / ‖exact‖ (absolute error when exact = 0).
inline double relative_error(const Vector &approx, const Vector &exact) {
    const double scale = exact.norm();
    return (approx - exact).norm() / (scale > 0 ? scale : 1.0);
}

} // namespace tmap::testing
