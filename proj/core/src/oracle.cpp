#include <tmap/errors.hpp>
#include <tmap/oracle.hpp>

#include <cmath>

namespace tmap {

HessianProduct ProblemOracle::hessian_at(const Vector &) const {
    throw CapabilityError("oracle does not provide Hessian-vector products");
}

double ProblemOracle::value_change(const Vector &x, const Vector &,
                                   const Vector &d) const {
    return value(x + d) - value(x);
}

Vector ProblemOracle::hessian_vector(const Vector &x, const Vector &v) const {
    Vector out;
    hessian_at(x)(v, out);
    return out;
}

double l1_term(const Vector &x, double gamma) {
    return gamma * x.lpNorm<1>();
}

double composite_value(const ProblemOracle &oracle, const Vector &x,
                       double gamma) {
    return oracle.value(x) + l1_term(x, gamma);
}

double composite_decrease(const ProblemOracle &oracle, const Vector &x,
                          const Vector &g, const Vector &y, double gamma) {
    require_same_size(x.size(), y.size(), "composite_decrease");
    double l1_drop = 0;
    for (Index i = 0; i < x.size(); ++i)
        l1_drop += std::abs(x[i]) - std::abs(y[i]);
    const Vector d = y - x;
    return gamma * l1_drop - oracle.value_change(x, g, d);
}

} // namespace tmap
