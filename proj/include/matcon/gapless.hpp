#pragma once

// Reduction from makespan minimization to non-idling feasibility.
//
// Any feasible schedule can be rearranged so that all idle time precedes the
// first job without changing its makespan. The optimum is therefore
// g* + sum(p), where g* is the smallest front idle for which a schedule that
// runs back-to-back from g* exists. Feasibility is monotone in g, so g* is
// found by binary search over [0, u_max].

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "matcon/core.hpp"

namespace matcon {

/// Decides whether the instance admits a schedule that runs back-to-back from
/// time 0, returning one when it does.
struct NiSolver {
  std::string name;
  std::function<std::optional<Schedule>(const Instance&)> solve;
  /// False for heuristics that may miss existing schedules.
  bool exact = true;
};

struct FrontIdleSolution {
  Time g = 0;
  /// Back-to-back from g, in the time frame of the unshifted instance.
  Schedule schedule;
};

/// Moves every supply `g` time units earlier; supplies that reach time 0 or
/// before are merged into a single supply at 0.
Instance shift_supplies(const Instance& inst, Time g);

/// Smallest g in [0, u_max] for which `solver` finds a non-idling schedule on
/// shift_supplies(inst, g). Empty when even g = u_max fails.
std::optional<FrontIdleSolution> min_front_idle(const Instance& inst, const NiSolver& solver,
                                                bool require_exact = true);

/// Smallest g in [0, u_max] for which the fixed `order` runs back-to-back
/// from g. Works on the unshifted instance, so no copies are made.
std::optional<FrontIdleSolution> min_front_idle(const Instance& inst, std::span<const int> order);

/// Optimal makespan via min_front_idle. Throws Infeasible when no feasible
/// schedule exists.
SolveResult solve_cmax(const Instance& inst, const NiSolver& solver);

}  // namespace matcon
