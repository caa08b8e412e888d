#pragma once

#include <tmap/solver.hpp>

namespace tmap::detail {

/// Outer loop shared by solve() and solve_safeguarded(). With
/// `safeguarded` false the acceptance test uses μ (η ignored) and there is no
/// switch to proximal gradient.
SolveReport tmap_loop(const ProblemOracle &oracle, const Vector &x0,
                      const SolverConfig &config, bool safeguarded);

} // namespace tmap::detail
