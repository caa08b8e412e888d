#include <tmap/errors.hpp>
#include <tmap/types.hpp>

#include <string>

namespace tmap {

void require_finite(const Vector &v, std::string_view what) {
    if (!v.allFinite())
        throw NumericError(std::string(what) + " contains NaN or Inf");
}

void require_same_size(Index a, Index b, std::string_view what) {
    if (a != b)
        throw DimensionError(std::string(what) + ": length " + std::to_string(a) +
                             " vs " + std::to_string(b));
}

Vector gather(const Vector &v, const IndexSet &idx) {
    Vector out(static_cast<Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j)
        out[static_cast<Index>(j)] = v[idx[j]];
    return out;
}

void scatter(const Vector &src, const IndexSet &idx, Vector &dst) {
    for (std::size_t j = 0; j < idx.size(); ++j)
        dst[idx[j]] = src[static_cast<Index>(j)];
}

} // namespace tmap
