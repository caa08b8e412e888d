#include <tmap/dct.hpp>
#include <tmap/errors.hpp>

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

namespace tmap {

namespace {

// FFTW's planner is not thread-safe but executing an existing plan on new
// arrays is. Plans are created once per (size, kind) and kept for the process
// lifetime.
class PlanCache {
  public:
    static PlanCache &instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int n, fftw_r2r_kind kind) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(n, static_cast<int>(kind));
        if (auto it = plans_.find(key); it != plans_.end())
            return it->second;
        std::vector<double> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
        fftw_plan plan = fftw_plan_r2r_1d(n, in.data(), out.data(), kind,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr)
            throw Error("FFTW failed to create a DCT plan");
        plans_.emplace(key, plan);
        return plan;
    }

    PlanCache(const PlanCache &) = delete;
    PlanCache &operator=(const PlanCache &) = delete;

  private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto &[key, plan] : plans_)
            fftw_destroy_plan(plan);
    }

    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

int checked_size(Index n) {
    if (n <= 0 || n > std::numeric_limits<int>::max())
        throw ParameterError("dct: length must be positive");
    return static_cast<int>(n);
}

} // namespace

Vector dct2(const Vector &x) {
    const int n = checked_size(x.size());
    Vector in = x;
    Vector out(n);
    fftw_execute_r2r(PlanCache::instance().get(n, FFTW_REDFT10), in.data(), out.data());
    // REDFT10 returns 2·Σ x_j cos(π(j+½)k/n).
    out[0] *= std::sqrt(1.0 / n) / 2;
    out.tail(n - 1) *= std::sqrt(2.0 / n) / 2;
    return out;
}

Vector idct2(const Vector &y) {
    const int n = checked_size(y.size());
    Vector in = y;
    // REDFT01 computes X_0 + 2·Σ_{k≥1} X_k cos(πk(j+½)/n).
    in[0] *= std::sqrt(1.0 / n);
    in.tail(n - 1) *= std::sqrt(2.0 / n) / 2;
    Vector out(n);
    fftw_execute_r2r(PlanCache::instance().get(n, FFTW_REDFT01), in.data(), out.data());
    return out;
}

Vector dct2_reference(const Vector &x) {
    const Index n = x.size();
    checked_size(n);
    Vector out(n);
    for (Index k = 0; k < n; ++k) {
        double acc = 0;
        for (Index j = 0; j < n; ++j)
            acc += x[j] * std::cos(std::numbers::pi * (j + 0.5) * k / n);
        out[k] = acc * std::sqrt((k == 0 ? 1.0 : 2.0) / n);
    }
    return out;
}

Vector idct2_reference(const Vector &y) {
    const Index n = y.size();
    checked_size(n);
    Vector out(n);
    for (Index j = 0; j < n; ++j) {
        double acc = 0;
        for (Index k = 0; k < n; ++k)
            acc += std::sqrt((k == 0 ? 1.0 : 2.0) / n) * y[k] *
                   std::cos(std::numbers::pi * (j + 0.5) * k / n);
        out[j] = acc;
    }
    return out;
}

PartialDctOperator::PartialDctOperator(Index n, IndexSet rows)
    : n_{n}, rows_{std::move(rows)} {
    checked_size(n_);
    if (static_cast<Index>(rows_.size()) > n_)
        throw ParameterError("PartialDctOperator: more rows than the signal length");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (Index r : rows_) {
        if (r < 0 || r >= n_)
            throw ParameterError("PartialDctOperator: row index out of range");
        if (seen[static_cast<std::size_t>(r)])
            throw ParameterError("PartialDctOperator: duplicate row index");
        seen[static_cast<std::size_t>(r)] = true;
    }
}

void PartialDctOperator::apply(const Vector &x, Vector &y) const {
    require_same_size(x.size(), n_, "PartialDctOperator::apply");
    y = gather(dct2(x), rows_);
}

void PartialDctOperator::adjoint(const Vector &y, Vector &x) const {
    require_same_size(y.size(), rows(), "PartialDctOperator::adjoint");
    Vector full = Vector::Zero(n_);
    scatter(y, rows_, full);
    x = idct2(full);
}

} // namespace tmap
