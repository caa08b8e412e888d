#pragma once

#include <tmap/sparse_matrix.hpp>

#include <filesystem>
#include <iosfwd>

namespace tmap {

enum class LabelMode {
    binary, ///< labels must be ±1 or 0/1; 0 maps to −1
    real,   ///< any finite label (regression targets)
};

struct LibsvmData {
    SparseRowMatrix matrix;
    Vector labels;
};

/// Parses "label idx:val idx:val …" lines with 1-based ascending indices.
/// Blank lines and lines starting with '#' are skipped. The column count is
/// the largest index seen, or `n_override` if positive (it must not be
/// smaller). Throws ParseError with the offending line number.
LibsvmData parse_libsvm(std::istream &is, LabelMode mode = LabelMode::binary,
                        Index n_override = 0);
LibsvmData parse_libsvm(const std::filesystem::path &path,
                        LabelMode mode = LabelMode::binary, Index n_override = 0);

/// Writes in the same format with shortest round-trip value formatting.
void write_libsvm(std::ostream &os, const SparseRowMatrix &a,
                  const Vector &labels);

} // namespace tmap
