#include <tmap/analysis.hpp>
#include <tmap/errors.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace tmap {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double median(std::vector<double> v) {
    std::ranges::sort(v);
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

IndexSet active_set(const Vector &x) {
    IndexSet out;
    for (Index i = 0; i < x.size(); ++i)
        if (x[i] == 0)
            out.push_back(i);
    return out;
}

std::uint64_t active_set_fingerprint(const Vector &x) {
    // A wrapping sum of per-index hashes does not depend on visiting order.
    std::uint64_t h = 0;
    for (Index i = 0; i < x.size(); ++i)
        if (x[i] == 0)
            h += splitmix64(static_cast<std::uint64_t>(i));
    return h;
}

std::optional<int> track_identification(std::span<const IterationRecord> trace) {
    if (trace.empty())
        return std::nullopt;
    const std::size_t last = trace.size() - 1;
    if (last > 0 && trace[last].active_set_fingerprint != trace[last - 1].active_set_fingerprint)
        return std::nullopt;
    std::size_t first = last;
    while (first > 0 && trace[first - 1].active_set_fingerprint == trace[last].active_set_fingerprint)
        --first;
    return trace[first].k;
}

RateEstimate estimate_rate_from_errors(std::span<const double> errors) {
    if (errors.size() < 4)
        throw InsufficientDataError("estimate_rate: need at least 4 error values");
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0) || !std::isfinite(errors[i]))
            throw InsufficientDataError("estimate_rate: errors must be positive and finite");
        if (i > 0 && !(errors[i] < errors[i - 1]))
            throw InsufficientDataError("estimate_rate: errors must be strictly decreasing");
    }
    std::vector<double> orders;
    for (std::size_t k = 1; k + 1 < errors.size(); ++k)
        orders.push_back(std::log(errors[k + 1] / errors[k]) /
                         std::log(errors[k] / errors[k - 1]));

    RateEstimate est;
    est.order = median(std::move(orders));
    est.first_ratio = errors[1] / errors[0];
    est.last_ratio = errors.back() / errors[errors.size() - 2];
    est.superlinear = est.last_ratio < 0.1 * est.first_ratio;
    est.used = static_cast<int>(errors.size());
    return est;
}

RateEstimate estimate_rate(std::span<const Vector> iterates, const Vector &x_star,
                           std::size_t last) {
    std::vector<double> errors;
    errors.reserve(iterates.size());
    for (const auto &x : iterates) {
        require_same_size(x.size(), x_star.size(), "estimate_rate");
        errors.push_back((x - x_star).norm());
    }
    while (!errors.empty() && errors.back() == 0)
        errors.pop_back();
    std::size_t start = errors.empty() ? 0 : errors.size() - 1;
    while (start > 0 && errors[start - 1] > errors[start])
        --start;
    if (last > 0 && errors.size() - start > last)
        start = errors.size() - last;
    return estimate_rate_from_errors(std::span<const double>(errors).subspan(start));
}

} // namespace tmap
