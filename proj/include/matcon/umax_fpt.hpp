#pragma once

// Non-idling feasibility for a single resource by enumerating the start
// times used before the last supply date.

#include <optional>
#include <vector>

#include "matcon/core.hpp"

namespace matcon {

/// Sorted break points r_1 < ... < r_k drawn from {1, ..., u_max}; r_0 = 0 is
/// implicit. Job i of the prefix occupies [r_{i-1}, r_i).
struct BreakSet {
  std::vector<Time> points;
};

struct SubsetWitness {
  BreakSet breaks;
  Schedule schedule;
};

/// Same as solve_ni_subsets, also reporting the accepting break set.
std::optional<SubsetWitness> solve_ni_subsets_witness(const Instance& inst);

/// A schedule running back-to-back from 0, or empty if none exists.
/// Requires a single resource (throws MultiResource). Runs in
/// O(2^u_max * n + n log n).
std::optional<Schedule> solve_ni_subsets(const Instance& inst);

}  // namespace matcon
