#include <tmap/errors.hpp>
#include <tmap/partition.hpp>

#include <algorithm>
#include <cmath>
#include <iterator>

namespace tmap {

IndexSet IndexPartition::minus() const {
    IndexSet out;
    out.reserve(minus_pos.size() + minus_neg.size());
    std::ranges::merge(minus_pos, minus_neg, std::back_inserter(out));
    return out;
}

namespace {

// Clauses are tested in the order I⁺, I⁻⁺, I⁻⁻. Under exact arithmetic the
// three sets are disjoint and cover every finite (x_i, g_i).
Region classify(double xi, double gi, double eps_k, double gamma) {
    const bool small_grad = std::abs(gi) < gamma;
    if ((std::abs(xi) <= eps_k && small_grad) ||
        (-eps_k <= xi && xi < 0 && gi <= -gamma) ||
        (0 < xi && xi <= eps_k && gi >= gamma))
        return Region::plus;
    if (xi > eps_k || (0 <= xi && xi <= eps_k && gi <= -gamma))
        return Region::minus_pos;
    if (xi < -eps_k || (-eps_k <= xi && xi <= 0 && gi >= gamma))
        return Region::minus_neg;
    throw NumericError("compute_partition: coordinate matches no clause (NaN?)");
}

} // namespace

IndexPartition compute_partition(const Vector &x, const Vector &g, double eps,
                                 double gamma,
                                 const StationarityResidual &residual) {
    require_same_size(x.size(), g.size(), "compute_partition");
    require_same_size(x.size(), residual.vector.size(), "compute_partition residual");
    if (!(eps > 0))
        throw ParameterError("compute_partition: eps must be positive");
    if (!(gamma > 0))
        throw ParameterError("compute_partition: gamma must be positive");

    IndexPartition part;
    part.pi = residual.norm;
    part.eps_k = std::min(eps, part.pi);
    part.region.resize(static_cast<std::size_t>(x.size()));
    for (Index i = 0; i < x.size(); ++i) {
        const Region r = classify(x[i], g[i], part.eps_k, gamma);
        part.region[static_cast<std::size_t>(i)] = r;
        switch (r) {
        case Region::plus: part.plus.push_back(i); break;
        case Region::minus_pos: part.minus_pos.push_back(i); break;
        case Region::minus_neg: part.minus_neg.push_back(i); break;
        }
    }
    return part;
}

IndexPartition compute_partition(const Vector &x, const Vector &g, double eps,
                                 double gamma) {
    return compute_partition(x, g, eps, gamma, stationarity_residual(x, g, gamma));
}

Vector omega(const IndexPartition &part, double gamma, Index n) {
    require_same_size(part.size(), n, "omega");
    Vector w = Vector::Zero(n);
    for (Index i : part.minus_pos)
        w[i] = gamma;
    for (Index i : part.minus_neg)
        w[i] = -gamma;
    return w;
}

Vector adaptive_project(const Vector &v, const IndexPartition &part, double t,
                        double gamma) {
    require_same_size(v.size(), part.size(), "adaptive_project");
    if (!(t > 0))
        throw ParameterError("adaptive_project: t must be positive");
    const double theta = t * gamma;
    Vector out(v.size());
    for (Index i = 0; i < v.size(); ++i) {
        switch (part.region[static_cast<std::size_t>(i)]) {
        case Region::plus: out[i] = soft_threshold(v[i], theta); break;
        case Region::minus_pos: out[i] = std::max(v[i], 0.0); break;
        case Region::minus_neg: out[i] = std::min(v[i], 0.0); break;
        }
    }
    return out;
}

} // namespace tmap
