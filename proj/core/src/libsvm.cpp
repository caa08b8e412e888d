#include <tmap/errors.hpp>
#include <tmap/libsvm.hpp>
#include <tmap/trace.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tmap {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i]))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j]))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_real(std::string_view tok, double &out) {
    if (!tok.empty() && tok.front() == '+')
        tok.remove_prefix(1);
    const auto *end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

bool parse_index(std::string_view tok, long long &out) {
    const auto *end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

} // namespace

LibsvmData parse_libsvm(std::istream &is, LabelMode mode, Index n_override) {
    SparseRowBuilder builder;
    std::vector<double> labels;
    std::vector<std::pair<Index, double>> row;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(is, line)) {
        ++lineno;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;

        double label = 0;
        if (!parse_real(tokens[0], label))
            throw ParseError("malformed label '" + std::string(tokens[0]) + "'", lineno);
        if (mode == LabelMode::binary) {
            if (label == 0)
                label = -1;
            if (label != 1 && label != -1)
                throw ParseError("label '" + std::string(tokens[0]) +
                                     "' cannot be mapped to {-1, +1}",
                                 lineno);
        }

        row.clear();
        long long prev = 0;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            const auto tok = tokens[t];
            const auto colon = tok.find(':');
            long long idx = 0;
            double val = 0;
            if (colon == std::string_view::npos || !parse_index(tok.substr(0, colon), idx) ||
                !parse_real(tok.substr(colon + 1), val))
                throw ParseError("malformed feature '" + std::string(tok) + "'", lineno);
            if (idx < 1)
                throw ParseError("feature index must be >= 1", lineno);
            if (idx <= prev)
                throw ParseError("feature indices must be strictly ascending", lineno);
            prev = idx;
            row.emplace_back(static_cast<Index>(idx - 1), val);
        }
        builder.add_row(row);
        labels.push_back(label);
    }
    if (is.bad())
        throw IoError("read error while parsing LIBSVM data");

    Index cols = builder.max_col() + 1;
    if (n_override > 0) {
        if (n_override < cols)
            throw ParseError("column override " + std::to_string(n_override) +
                                 " is smaller than the largest index " + std::to_string(cols),
                             0);
        cols = n_override;
    }
    LibsvmData data;
    data.matrix = std::move(builder).build(cols);
    data.labels = Eigen::Map<const Vector>(labels.data(), static_cast<Index>(labels.size()));
    return data;
}

LibsvmData parse_libsvm(const std::filesystem::path &path, LabelMode mode,
                        Index n_override) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return parse_libsvm(in, mode, n_override);
}

void write_libsvm(std::ostream &os, const SparseRowMatrix &a, const Vector &labels) {
    require_same_size(labels.size(), a.rows(), "write_libsvm");
    for (Index r = 0; r < a.rows(); ++r) {
        os << format_double(labels[r]);
        const auto idx = a.row_indices(r);
        const auto val = a.row_values(r);
        for (std::size_t j = 0; j < idx.size(); ++j)
            os << ' ' << idx[j] + 1 << ':' << format_double(val[j]);
        os << '\n';
    }
}

} // namespace tmap
