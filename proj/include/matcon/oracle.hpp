#pragma once

// Reference solvers used as ground truth. They are exponential and meant for
// small instances.

#include <optional>

#include "matcon/core.hpp"

namespace matcon {

struct OracleOptions {
  /// Largest n accepted by solve_exact_permutations.
  int permutation_cap = 8;
  /// Largest n accepted by solve_exact_timepoints.
  int timepoint_job_cap = 5;
  /// Largest u_max + sum(p) accepted by solve_exact_timepoints.
  Time timepoint_horizon_cap = 64;
};

/// Minimum over all job orders of (smallest feasible front idle + sum(p)).
/// The front idle is found by scanning g = 0, 1, ..., u_max. Among optimal
/// orders the lexicographically smallest is returned.
std::optional<SolveResult> solve_exact_permutations(const Instance& inst,
                                                    const OracleOptions& options = {});

/// Exhaustive search over integer start times in [0, u_max + sum(p)], with
/// idle allowed anywhere.
std::optional<SolveResult> solve_exact_timepoints(const Instance& inst,
                                                  const OracleOptions& options = {});

/// Depth-first search over job sequences run back-to-back from 0. Once the
/// elapsed time reaches u_max every supply has arrived, so the remaining jobs
/// are appended in (requirement vector, index) order. Dead job sets are
/// memoized. Returns the first feasible schedule in search order.
std::optional<Schedule> solve_ni_prefix_search(const Instance& inst);

}  // namespace matcon
