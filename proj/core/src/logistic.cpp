#include <tmap/errors.hpp>
#include <tmap/logistic.hpp>

#include <cmath>
#include <string>

namespace tmap {

double softplus(double z) noexcept {
    return z <= 0 ? std::log1p(std::exp(z)) : z + std::log1p(std::exp(-z));
}

namespace {

// 1 / (1 + e^{−z}) without overflow.
double sigmoid(double z) noexcept {
    if (z >= 0)
        return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// softplus(z + delta) − softplus(z) = log1p(σ(z)·expm1(delta)).
double softplus_change(double z, double delta) noexcept {
    if (std::abs(delta) > 1.0)
        return softplus(z + delta) - softplus(z);
    return std::log1p(sigmoid(z) * std::expm1(delta));
}

void check_labels(const SparseRowMatrix &a, const Vector &labels) {
    require_same_size(labels.size(), a.rows(), "logistic: labels vs rows");
    for (Index i = 0; i < labels.size(); ++i)
        if (labels[i] != 1.0 && labels[i] != -1.0)
            throw DataError("logistic: label " + std::to_string(i) + " is not ±1");
}

// z_i = −b_i a_iᵀx
Vector margins(const SparseRowMatrix &a, const Vector &labels, const Vector &x) {
    Vector ax;
    a.multiply(x, ax);
    return -labels.cwiseProduct(ax);
}

} // namespace

ValueGrad logistic_value_grad(const SparseRowMatrix &a, const Vector &labels,
                              const Vector &x) {
    check_labels(a, labels);
    require_same_size(x.size(), a.cols(), "logistic: x");
    const Vector z = margins(a, labels, x);
    const double m = static_cast<double>(a.rows());
    ValueGrad out;
    Vector weights(z.size());
    double sum = 0;
    for (Index i = 0; i < z.size(); ++i) {
        sum += softplus(z[i]);
        weights[i] = -labels[i] * sigmoid(z[i]) / m;
    }
    out.value = sum / m;
    a.multiply_transpose(weights, out.grad);
    return out;
}

Vector logistic_hessvec(const SparseRowMatrix &a, const Vector &labels,
                        const Vector &x, const Vector &v) {
    check_labels(a, labels);
    require_same_size(x.size(), a.cols(), "logistic: x");
    require_same_size(v.size(), a.cols(), "logistic: v");
    const Vector z = margins(a, labels, x);
    const double m = static_cast<double>(a.rows());
    Vector av;
    a.multiply(v, av);
    for (Index i = 0; i < z.size(); ++i)
        av[i] *= sigmoid(z[i]) * sigmoid(-z[i]) / m;
    Vector out;
    a.multiply_transpose(av, out);
    return out;
}

LogisticOracle::LogisticOracle(std::shared_ptr<const SparseRowMatrix> a, Vector labels)
    : a_{std::move(a)}, labels_{std::move(labels)} {
    if (!a_)
        throw ParameterError("LogisticOracle: null matrix");
    if (a_->rows() == 0)
        throw DataError("LogisticOracle: no samples");
    check_labels(*a_, labels_);
}

double LogisticOracle::value(const Vector &x) const {
    require_same_size(x.size(), a_->cols(), "LogisticOracle::value");
    const Vector z = margins(*a_, labels_, x);
    double sum = 0;
    for (Index i = 0; i < z.size(); ++i)
        sum += softplus(z[i]);
    return sum / static_cast<double>(a_->rows());
}

double LogisticOracle::value_and_gradient(const Vector &x, Vector &grad) const {
    ValueGrad vg = logistic_value_grad(*a_, labels_, x);
    grad = std::move(vg.grad);
    return vg.value;
}

HessianProduct LogisticOracle::hessian_at(const Vector &x) const {
    require_same_size(x.size(), a_->cols(), "LogisticOracle::hessian_at");
    const Vector z = margins(*a_, labels_, x);
    const double m = static_cast<double>(a_->rows());
    Vector weights(z.size());
    for (Index i = 0; i < z.size(); ++i)
        weights[i] = sigmoid(z[i]) * sigmoid(-z[i]) / m;
    return [a = a_, weights = std::move(weights)](const Vector &v, Vector &out) {
        Vector av;
        a->multiply(v, av);
        av.array() *= weights.array();
        a->multiply_transpose(av, out);
    };
}

double LogisticOracle::value_change(const Vector &x, const Vector &,
                                    const Vector &d) const {
    const Vector z = margins(*a_, labels_, x);
    const Vector dz = margins(*a_, labels_, d);
    double sum = 0;
    for (Index i = 0; i < z.size(); ++i)
        sum += softplus_change(z[i], dz[i]);
    return sum / static_cast<double>(a_->rows());
}

} // namespace tmap
