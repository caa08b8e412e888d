#include <tmap/errors.hpp>
#include <tmap/smooth_models.hpp>

namespace tmap {

QuadraticOracle::QuadraticOracle(Eigen::MatrixXd q_mat, Vector q_vec)
    : q_mat_{std::move(q_mat)}, q_vec_{std::move(q_vec)} {
    if (q_mat_.rows() != q_mat_.cols())
        throw DimensionError("QuadraticOracle: Q must be square");
    require_same_size(q_mat_.rows(), q_vec_.size(), "QuadraticOracle");
}

double QuadraticOracle::value(const Vector &x) const {
    return 0.5 * x.dot(q_mat_ * x) - q_vec_.dot(x);
}

double QuadraticOracle::value_and_gradient(const Vector &x, Vector &grad) const {
    const Vector qx = q_mat_ * x;
    grad = qx - q_vec_;
    return 0.5 * x.dot(qx) - q_vec_.dot(x);
}

HessianProduct QuadraticOracle::hessian_at(const Vector &) const {
    return [this](const Vector &v, Vector &out) { out.noalias() = q_mat_ * v; };
}

double QuadraticOracle::value_change(const Vector &, const Vector &g,
                                     const Vector &d) const {
    return d.dot(g) + 0.5 * d.dot(q_mat_ * d);
}

double GemanMcClureOracle::value(const Vector &x) const {
    require_same_size(x.size(), n_, "GemanMcClureOracle::value");
    return x.unaryExpr([](double v) { return v * v / (1 + v * v); }).sum();
}

double GemanMcClureOracle::value_and_gradient(const Vector &x, Vector &grad) const {
    grad = x.unaryExpr([](double v) {
        const double s = 1 + v * v;
        return 2 * v / (s * s);
    });
    return value(x);
}

HessianProduct GemanMcClureOracle::hessian_at(const Vector &x) const {
    Vector diag = x.unaryExpr([](double v) {
        const double s = 1 + v * v;
        return (2 - 6 * v * v) / (s * s * s);
    });
    return [diag = std::move(diag)](const Vector &v, Vector &out) {
        out = diag.cwiseProduct(v);
    };
}

} // namespace tmap
