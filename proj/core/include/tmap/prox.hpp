#pragma once

#include <tmap/types.hpp>

namespace tmap {

/// Scale and weight of the proximal map of t·γ‖·‖₁.
struct ProxParams {
    double gamma = 0; ///< ℓ1 weight, γ ≥ 0
    double t = 1;     ///< step, t > 0

    /// Throws ParameterError when gamma < 0 or t <= 0.
    void validate() const;
};

/// S_θ(v) = sign(v)·max(|v| − θ, 0).
inline double soft_threshold(double v, double theta) noexcept {
    if (v > theta)
        return v - theta;
    if (v < -theta)
        return v + theta;
    return 0.0;
}

/// prox of t·γ‖·‖₁, i.e. componentwise soft thresholding at t·γ.
Vector prox_l1(const Vector &x, ProxParams params);

struct StationarityResidual {
    Vector vector; ///< x − prox_γ‖·‖₁(x − g)
    double norm = 0;
};

/// r(x) = ‖x − prox_{γ‖·‖₁}(x − g)‖ together with the componentwise vector.
/// The norm is zero exactly at stationary points of f + γ‖·‖₁.
StationarityResidual stationarity_residual(const Vector &x, const Vector &g,
                                           double gamma);

/// G_t(x⁺) = (x⁺ − prox_{tγ‖·‖₁}(x⁺ − t g⁺)) / t on the I⁺ subvectors.
Vector gradient_map(const Vector &x_plus, const Vector &g_plus, double t,
                    double gamma);

} // namespace tmap
