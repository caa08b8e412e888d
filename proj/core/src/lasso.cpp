#include <tmap/errors.hpp>
#include <tmap/lasso.hpp>

namespace tmap {

LassoEvaluation lasso_value_grad_hessvec(const LinearOperator &op,
                                         const Vector &b, const Vector &x,
                                         const Vector &v) {
    require_same_size(b.size(), op.rows(), "lasso: b");
    require_same_size(x.size(), op.cols(), "lasso: x");
    require_same_size(v.size(), op.cols(), "lasso: v");
    LassoEvaluation ev;
    Vector residual;
    op.apply(x, residual);
    residual -= b;
    ev.value = 0.5 * residual.squaredNorm();
    op.adjoint(residual, ev.grad);
    Vector av;
    op.apply(v, av);
    op.adjoint(av, ev.hessvec);
    return ev;
}

LassoOracle::LassoOracle(std::shared_ptr<const LinearOperator> op, Vector b)
    : op_{std::move(op)}, b_{std::move(b)} {
    if (!op_)
        throw ParameterError("LassoOracle: null operator");
    require_same_size(b_.size(), op_->rows(), "LassoOracle: b");
    require_finite(b_, "LassoOracle: b");
}

double LassoOracle::value(const Vector &x) const {
    require_same_size(x.size(), op_->cols(), "LassoOracle::value");
    Vector residual;
    op_->apply(x, residual);
    residual -= b_;
    return 0.5 * residual.squaredNorm();
}

double LassoOracle::value_and_gradient(const Vector &x, Vector &grad) const {
    require_same_size(x.size(), op_->cols(), "LassoOracle::value_and_gradient");
    Vector residual;
    op_->apply(x, residual);
    residual -= b_;
    op_->adjoint(residual, grad);
    return 0.5 * residual.squaredNorm();
}

HessianProduct LassoOracle::hessian_at(const Vector &) const {
    return [op = op_](const Vector &v, Vector &out) {
        Vector av;
        op->apply(v, av);
        op->adjoint(av, out);
    };
}

double LassoOracle::value_change(const Vector &, const Vector &g,
                                 const Vector &d) const {
    Vector ad;
    op_->apply(d, ad);
    return d.dot(g) + 0.5 * ad.squaredNorm();
}

} // namespace tmap
