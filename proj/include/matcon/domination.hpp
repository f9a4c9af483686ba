#pragma once

// Job domination and the polynomial solver for weakly ordered instances.
//
// Job J dominates J' when p(J) >= p(J') and J needs at most as much of every
// resource. In a non-idling schedule a dominating job can always be moved in
// front of a job it dominates. When domination ranks all jobs (a weak order),
// running them in that order is the only candidate worth checking.

#include <optional>
#include <vector>

#include "matcon/core.hpp"

namespace matcon {

enum class DominationVerdict { FirstDominates, SecondDominates, Equal, Incomparable };

DominationVerdict dominates(const Job& first, const Job& second);

/// True iff `first` dominates `second` and not the other way around.
bool strictly_dominates(const Job& first, const Job& second);

struct WeakOrderCertificate {
  /// Dominating jobs first; ties by input index.
  std::vector<int> ordering;
  /// Consecutive blocks of `ordering` holding mutually dominating jobs,
  /// given as [begin, end) offsets into `ordering`.
  std::vector<std::pair<int, int>> tie_classes;
};

/// Present iff every pair of jobs is comparable under domination.
///
/// Sorts by the total key (p descending, requirement vector ascending, index)
/// and checks that each job dominates its successor; by transitivity this is
/// the same as all pairs being comparable, in O(n log n + n r).
std::optional<WeakOrderCertificate> weak_order(const Instance& inst);

/// Runs the jobs back-to-back from 0 in weak order. Empty iff no non-idling
/// schedule from 0 exists. Throws NotWeaklyOrdered when weak_order is empty.
std::optional<Schedule> solve_weak_order_ni(const Instance& inst);

}  // namespace matcon
