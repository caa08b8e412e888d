#pragma once

#include <tmap/solver.hpp>
#include <tmap/types.hpp>

#include <cstdint>
#include <optional>
#include <span>

namespace tmap {

/// A(x) = {i : x_i = 0}, exact zeros only.
IndexSet active_set(const Vector &x);

/// Order-independent 64-bit hash of A(x). The empty set hashes to 0.
std::uint64_t active_set_fingerprint(const Vector &x);

/// Smallest K such that the fingerprint is constant for every k ≥ K through
/// the last row. Empty when the last two rows differ (or the trace is empty).
std::optional<int> track_identification(std::span<const IterationRecord> trace);

struct RateEstimate {
    double order = 0;       ///< median of log(e_{k+1}/e_k) / log(e_k/e_{k−1})
    bool superlinear = false; ///< last ratio < 0.1 × first ratio
    double first_ratio = 0;
    double last_ratio = 0;
    int used = 0;           ///< number of error values used
};

/// Order estimate from a positive, decreasing error sequence.
/// Throws InsufficientDataError with fewer than 4 usable values.
RateEstimate estimate_rate_from_errors(std::span<const double> errors);

/// Same with e_k = ‖x_k − x*‖. Trailing iterates at or past x* (e_k = 0) and
/// any non-decreasing prefix are dropped; then only the last `last` values are
/// kept (all of them when last = 0).
RateEstimate estimate_rate(std::span<const Vector> iterates,
                           const Vector &x_star, std::size_t last = 0);

} // namespace tmap
