#pragma once

#include <tmap/prox.hpp>
#include <tmap/types.hpp>

#include <cstdint>

namespace tmap {

/// Which block of the adaptive partition a coordinate belongs to.
enum class Region : std::uint8_t {
    plus,      ///< I⁺: near zero with a small gradient, handled by soft thresholding
    minus_pos, ///< I⁻⁺: treated as nonnegative by the Newton block
    minus_neg, ///< I⁻⁻: treated as nonpositive by the Newton block
};

/// The partition (I⁺, I⁻⁺, I⁻⁻) of {0,…,n−1} at the current iterate,
/// together with π = r(x) and the band width ε_k = min{ε, π}.
struct IndexPartition {
    IndexSet plus;
    IndexSet minus_pos;
    IndexSet minus_neg;
    std::vector<Region> region; ///< region[i] for each coordinate
    double pi = 0;
    double eps_k = 0;

    Index size() const noexcept { return static_cast<Index>(region.size()); }

    /// I⁻ = I⁻⁺ ∪ I⁻⁻ in ascending order. Subvectors over I⁻ use this order.
    IndexSet minus() const;
};

/// Builds the partition. `residual` must be stationarity_residual(x, g, gamma).
IndexPartition compute_partition(const Vector &x, const Vector &g, double eps,
                                 double gamma,
                                 const StationarityResidual &residual);

/// Convenience overload that computes the stationarity residual itself.
IndexPartition compute_partition(const Vector &x, const Vector &g, double eps,
                                 double gamma);

/// ω: γ on I⁻⁺, −γ on I⁻⁻, 0 on I⁺.
Vector omega(const IndexPartition &part, double gamma, Index n);

/// The iterate-dependent projection: max{v,0} on I⁻⁺, min{v,0} on I⁻⁻ and
/// S_{tγ}(v) on I⁺.
Vector adaptive_project(const Vector &v, const IndexPartition &part, double t,
                        double gamma);

} // namespace tmap
