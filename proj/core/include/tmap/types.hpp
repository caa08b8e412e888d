#pragma once

#include <Eigen/Core>

#include <string_view>
#include <vector>

namespace tmap {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Sorted, duplicate-free list of 0-based coordinate indices.
using IndexSet = std::vector<Index>;

/// Throws NumericError if any entry of `v` is NaN or infinite.
void require_finite(const Vector &v, std::string_view what);

/// Throws DimensionError if the two lengths differ.
void require_same_size(Index a, Index b, std::string_view what);

/// Gathers v[idx] into a vector of length idx.size().
Vector gather(const Vector &v, const IndexSet &idx);

/// Writes src into dst[idx]; other entries of dst are left untouched.
void scatter(const Vector &src, const IndexSet &idx, Vector &dst);

} // namespace tmap
