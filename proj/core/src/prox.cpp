#include <tmap/errors.hpp>
#include <tmap/prox.hpp>

#include <cmath>
#include <string>

namespace tmap {

void ProxParams::validate() const {
    if (!(gamma >= 0) || !std::isfinite(gamma))
        throw ParameterError("prox: gamma must be finite and nonnegative");
    if (!(t > 0) || !std::isfinite(t))
        throw ParameterError("prox: t must be finite and positive");
}

Vector prox_l1(const Vector &x, ProxParams params) {
    params.validate();
    const double theta = params.t * params.gamma;
    return x.unaryExpr([theta](double v) { return soft_threshold(v, theta); });
}

StationarityResidual stationarity_residual(const Vector &x, const Vector &g,
                                           double gamma) {
    require_same_size(x.size(), g.size(), "stationarity_residual");
    StationarityResidual res;
    res.vector = x - prox_l1(x - g, {gamma, 1.0});
    res.norm = res.vector.norm();
    return res;
}

Vector gradient_map(const Vector &x_plus, const Vector &g_plus, double t,
                    double gamma) {
    require_same_size(x_plus.size(), g_plus.size(), "gradient_map");
    if (!(t > 0))
        throw ParameterError("gradient_map: t must be positive");
    return (x_plus - prox_l1(x_plus - t * g_plus, {gamma, t})) / t;
}

} // namespace tmap
