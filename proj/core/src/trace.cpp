#include <tmap/errors.hpp>
#include <tmap/trace.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace tmap {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

namespace {

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(',', start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

template <class T>
T parse_field(std::string_view tok, const char *name) {
    T out{};
    const auto *end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(std::string("trace: bad ") + name + " '" + std::string(tok) + "'", 0);
    return out;
}

} // namespace

std::string format_trace_row(const IterationRecord &r) {
    std::string s;
    s += std::to_string(r.k);
    s += ',' + format_double(r.psi);
    s += ',' + format_double(r.residual_norm);
    s += ',' + format_double(r.t_k);
    s += ',' + format_double(r.mu_k);
    s += ',' + std::to_string(r.minus_set_size);
    s += ',' + std::to_string(r.cg_iters);
    s += ',' + std::to_string(r.active_set_fingerprint);
    s += r.used_safeguard ? ",1" : ",0";
    s += ',' + std::to_string(r.backtracks);
    return s;
}

IterationRecord parse_trace_row(const std::string &line) {
    const auto f = split_commas(line);
    if (f.size() != 10)
        throw ParseError("trace: expected 10 columns, got " + std::to_string(f.size()), 0);
    IterationRecord r;
    r.k = parse_field<int>(f[0], "k");
    r.psi = parse_field<double>(f[1], "psi");
    r.residual_norm = parse_field<double>(f[2], "residual_norm");
    r.t_k = parse_field<double>(f[3], "t_k");
    r.mu_k = parse_field<double>(f[4], "mu_k");
    r.minus_set_size = parse_field<Index>(f[5], "minus_set_size");
    r.cg_iters = parse_field<int>(f[6], "cg_iters");
    r.active_set_fingerprint = parse_field<std::uint64_t>(f[7], "active_set_fingerprint");
    const int flag = parse_field<int>(f[8], "used_safeguard");
    if (flag != 0 && flag != 1)
        throw ParseError("trace: used_safeguard must be 0 or 1", 0);
    r.used_safeguard = flag == 1;
    r.backtracks = parse_field<int>(f[9], "backtracks");
    return r;
}

void write_trace(std::ostream &os, const SolveReport &report) {
    os << kTraceVersionLine << '\n' << kTraceHeader << '\n';
    for (const auto &r : report.trace)
        os << format_trace_row(r) << '\n';
    os << "# summary status=" << to_string(report.status)
       << " iterations=" << (report.trace.empty() ? 0 : report.trace.size() - 1)
       << " identification_iter="
       << (report.identification_iter ? std::to_string(*report.identification_iter) : "none")
       << " final_residual=" << format_double(report.final_residual())
       << " wall_time_s=" << format_double(report.wall_time_seconds)
       << " switch_count=" << report.safeguard.switch_count << '\n';
}

TraceFile read_trace(std::istream &is) {
    TraceFile file;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.rfind("# summary", 0) == 0) {
            std::istringstream ss(line.substr(9));
            std::string kv;
            while (ss >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw ParseError("trace summary: expected key=value", lineno);
                const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                auto &s = file.summary;
                if (key == "status")
                    s.status = val;
                else if (key == "iterations")
                    s.iterations = parse_field<int>(val, "iterations");
                else if (key == "identification_iter")
                    s.identification_iter = val == "none"
                                                ? std::nullopt
                                                : std::optional<int>(parse_field<int>(val, "identification_iter"));
                else if (key == "final_residual")
                    s.final_residual = parse_field<double>(val, "final_residual");
                else if (key == "wall_time_s")
                    s.wall_time_seconds = parse_field<double>(val, "wall_time_s");
                else if (key == "switch_count")
                    s.switch_count = parse_field<int>(val, "switch_count");
            }
            continue;
        }
        if (line[0] == '#')
            continue;
        if (!header_seen) {
            if (line != kTraceHeader)
                throw ParseError("trace: unexpected header", lineno);
            header_seen = true;
            continue;
        }
        IterationRecord r;
        try {
            r = parse_trace_row(line);
        } catch (const ParseError &e) {
            throw ParseError(e.what(), lineno);
        }
        const int expected = file.rows.empty() ? 0 : file.rows.back().k + 1;
        if (r.k != expected)
            throw ParseError("trace: k must increase by one from 0", lineno);
        file.rows.push_back(r);
    }
    return file;
}

} // namespace tmap
