#pragma once

#include <tmap/dct.hpp>
#include <tmap/sparse_matrix.hpp>
#include <tmap/types.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>

namespace tmap {

/// Compressed-sensing LASSO instance parameters: a k-sparse signal with
/// magnitudes 10^{d·u/20}, u ~ U[0,1], random signs, observed through m
/// randomly selected rows of the orthonormal DCT plus N(0, σ²) noise.
struct LassoInstanceParams {
    Index n = 1024;
    Index m = 256;
    Index k = 25;
    double dynamic_range_db = 20;
    double noise_sigma = 0.1;
    std::uint64_t seed = 1;

    /// Throws ParameterError if k > n, m > n or a value is negative.
    void validate() const;
};

struct LassoInstance {
    LassoInstanceParams params;
    std::shared_ptr<const PartialDctOperator> op;
    Vector b;
    Vector x_true;
};

/// Deterministic in `params` (same seed ⇒ bitwise-identical instance).
LassoInstance generate_lasso_instance(const LassoInstanceParams &params);

/// Text sidecar, see README ("Instance sidecar format").
void write_lasso_instance(std::ostream &os, const LassoInstance &inst);
LassoInstance read_lasso_instance(std::istream &is);

/// Dense Gaussian features and labels b_i = sign(a_iᵀw + noise) from a sparse
/// planted w. Used for synthetic logistic-regression runs.
struct LogisticInstanceParams {
    Index m = 500;
    Index n = 50;
    Index support = 10;
    double label_noise = 0.5;
    std::uint64_t seed = 1;
};

struct LogisticInstance {
    std::shared_ptr<const SparseRowMatrix> a;
    Vector labels;
};

LogisticInstance generate_logistic_instance(const LogisticInstanceParams &params);

} // namespace tmap
