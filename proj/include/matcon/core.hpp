#pragma once

// Instance and schedule data model for single-machine scheduling with
// non-renewable resources, plus the feasibility checker.
//
// Resources are consumed at the instant a job starts. A schedule is feasible
// when no two jobs overlap and, for every resource and every start time t,
// the demand of all jobs started at or before t does not exceed the supply
// delivered at or before t.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matcon/error.hpp"

namespace matcon {

using Time = std::int64_t;
using Quantity = std::int64_t;
using ResourceVector = std::vector<Quantity>;

struct Job {
  Time p = 1;
  ResourceVector a;

  bool operator==(const Job&) const = default;
};

struct Supply {
  Time u = 0;
  ResourceVector b;

  bool operator==(const Supply&) const = default;
};

/// Unvalidated instance data as read from a file or built by a generator.
struct RawInstance {
  int resources = 1;
  std::vector<Job> jobs;
  std::vector<Supply> supplies;
};

class Instance;
Instance validate_instance(RawInstance raw);

/// A structurally valid instance: every vector has length `resource_count()`,
/// every p >= 1, quantities are non-negative and supply dates strictly
/// increase. Only `validate_instance` constructs one.
class Instance {
 public:
  Instance() = default;

  int resource_count() const noexcept { return resources_; }
  const std::vector<Job>& jobs() const noexcept { return jobs_; }
  const std::vector<Supply>& supplies() const noexcept { return supplies_; }
  const Job& job(int j) const { return jobs_.at(static_cast<std::size_t>(j)); }

  int n() const noexcept { return static_cast<int>(jobs_.size()); }
  int q() const noexcept { return static_cast<int>(supplies_.size()); }

  /// Date of the last supply; 0 when there are none.
  Time u_max() const noexcept { return supplies_.empty() ? 0 : supplies_.back().u; }
  Quantity a_max() const noexcept;
  Quantity b_max() const noexcept;
  Time p_max() const noexcept;
  Time total_processing() const noexcept;
  Quantity total_demand(int resource) const;
  Quantity total_supply(int resource) const;

  RawInstance raw() const { return {resources_, jobs_, supplies_}; }

  bool operator==(const Instance&) const = default;

 private:
  friend Instance validate_instance(RawInstance raw);

  int resources_ = 1;
  std::vector<Job> jobs_;
  std::vector<Supply> supplies_;
};

/// Checks shapes and signs, sorts supplies by date and merges supplies that
/// share a date by adding their vectors.
Instance validate_instance(RawInstance raw);

struct ScheduledJob {
  int job = 0;
  Time start = 0;

  bool operator==(const ScheduledJob&) const = default;
};

struct Schedule {
  std::vector<ScheduledJob> starts;

  bool operator==(const Schedule&) const = default;
};

/// Jobs of `order` run back-to-back, the first one starting at `start`.
Schedule back_to_back(const Instance& inst, std::span<const int> order, Time start = 0);

/// Job indices sorted by start time (ties by index).
std::vector<int> job_order(const Schedule& sched);

/// Adds `delta` to every start time.
Schedule shifted(Schedule sched, Time delta);

enum class ViolationKind { Overlap, ResourceDeficit };

struct Violation {
  ViolationKind kind = ViolationKind::Overlap;
  int job = 0;
  Time time = 0;
  /// Set for resource deficits only.
  std::optional<int> resource;
  Quantity demand = 0;
  Quantity supply = 0;

  bool operator==(const Violation&) const = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::optional<Violation> first_violation;
};

std::string describe(const Violation& v);

/// Total supply of `resource` delivered at or before `t`.
Quantity cumulative_supply(const Instance& inst, int resource, Time t);

/// Throws MissingJob / DuplicateJob / InvalidJobIndex / NegativeStart when the
/// schedule does not cover every job exactly once. The reported violation is
/// the earliest by time; at equal times overlaps are reported first.
FeasibilityReport check_feasible(const Instance& inst, const Schedule& sched);

/// Fast path for the common case of a job sequence run without idle from
/// `start`; equivalent to check_feasible(inst, back_to_back(inst, order, start)).
bool sequence_feasible(const Instance& inst, std::span<const int> order, Time start = 0);

Time makespan(const Schedule& sched, const Instance& inst);

struct NormalizationOutcome {
  Instance normalized;
  Time makespan_offset = 0;
  /// Jobs without any requirement, in original index order.
  std::vector<int> removed_jobs;
  /// kept_jobs[i] is the original index of normalized job i.
  std::vector<int> kept_jobs;
};

/// Removes jobs without requirements and moves the first useful supply to
/// time 0. The optimal makespan of the original instance equals the optimal
/// makespan of `normalized` plus `makespan_offset`.
NormalizationOutcome normalize(const Instance& inst);

/// True iff the instance satisfies all three normalization conditions.
bool is_normalized(const Instance& inst);

/// Maps a schedule of `outcome.normalized` back onto the original instance:
/// removed jobs run first from time 0, kept jobs are delayed by the offset.
Schedule restore_schedule(const NormalizationOutcome& outcome, const Instance& original,
                          const Schedule& normalized_schedule);

struct SolveResult {
  Time makespan = 0;
  Schedule schedule;
  Time front_idle = 0;
  std::string algorithm;
};

}  // namespace matcon
