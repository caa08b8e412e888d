#pragma once

#include <tmap/solver.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tmap {

/// First line of every trace file.
inline constexpr const char *kTraceVersionLine = "# tmap-trace v1";

/// Column order of the trace CSV.
inline constexpr const char *kTraceHeader =
    "k,psi,residual_norm,t_k,mu_k,minus_set_size,cg_iters,"
    "active_set_fingerprint,used_safeguard,backtracks";

struct TraceSummary {
    std::string status;
    int iterations = 0;
    std::optional<int> identification_iter;
    double final_residual = 0;
    double wall_time_seconds = 0;
    int switch_count = 0;
};

struct TraceFile {
    std::vector<IterationRecord> rows;
    TraceSummary summary;
};

std::string format_trace_row(const IterationRecord &r);
IterationRecord parse_trace_row(const std::string &line);

void write_trace(std::ostream &os, const SolveReport &report);
/// Throws ParseError on malformed rows or non-increasing k.
TraceFile read_trace(std::istream &is);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

} // namespace tmap
