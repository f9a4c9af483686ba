#include "matcon/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace matcon {

namespace {

bool all_zero(const ResourceVector& v) {
  return std::all_of(v.begin(), v.end(), [](Quantity x) { return x == 0; });
}

void add_into(ResourceVector& acc, const ResourceVector& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

// Sorts by date and merges equal dates. Input dates are non-negative.
std::vector<Supply> merge_supplies(std::vector<Supply> supplies) {
  std::stable_sort(supplies.begin(), supplies.end(),
                   [](const Supply& x, const Supply& y) { return x.u < y.u; });
  std::vector<Supply> merged;
  for (auto& s : supplies) {
    if (!merged.empty() && merged.back().u == s.u) {
      add_into(merged.back().b, s.b);
    } else {
      merged.push_back(std::move(s));
    }
  }
  return merged;
}

}  // namespace

Quantity Instance::a_max() const noexcept {
  Quantity m = 0;
  for (const auto& j : jobs_)
    for (Quantity x : j.a) m = std::max(m, x);
  return m;
}

Quantity Instance::b_max() const noexcept {
  Quantity m = 0;
  for (const auto& s : supplies_)
    for (Quantity x : s.b) m = std::max(m, x);
  return m;
}

Time Instance::p_max() const noexcept {
  Time m = 0;
  for (const auto& j : jobs_) m = std::max(m, j.p);
  return m;
}

Time Instance::total_processing() const noexcept {
  Time t = 0;
  for (const auto& j : jobs_) t += j.p;
  return t;
}

Quantity Instance::total_demand(int resource) const {
  if (resource < 0 || resource >= resources_)
    throw Error(ErrorCode::ResourceIndexOutOfRange, "resource " + std::to_string(resource));
  Quantity total = 0;
  for (const auto& j : jobs_) total += j.a[static_cast<std::size_t>(resource)];
  return total;
}

Quantity Instance::total_supply(int resource) const {
  if (resource < 0 || resource >= resources_)
    throw Error(ErrorCode::ResourceIndexOutOfRange, "resource " + std::to_string(resource));
  Quantity total = 0;
  for (const auto& s : supplies_) total += s.b[static_cast<std::size_t>(resource)];
  return total;
}

Instance validate_instance(RawInstance raw) {
  if (raw.resources < 1)
    throw Error(ErrorCode::InvalidResourceCount,
                "resource count must be positive, got " + std::to_string(raw.resources));
  const auto r = static_cast<std::size_t>(raw.resources);
  for (std::size_t j = 0; j < raw.jobs.size(); ++j) {
    const auto& job = raw.jobs[j];
    if (job.a.size() != r)
      throw Error(ErrorCode::DimensionMismatch, "job " + std::to_string(j) + " has " +
                                                    std::to_string(job.a.size()) +
                                                    " requirements, expected " + std::to_string(r));
    if (job.p < 1)
      throw Error(ErrorCode::NonPositiveProcessingTime,
                  "job " + std::to_string(j) + " has p = " + std::to_string(job.p));
    for (Quantity x : job.a)
      if (x < 0) throw Error(ErrorCode::NegativeQuantity, "job " + std::to_string(j));
  }
  for (std::size_t l = 0; l < raw.supplies.size(); ++l) {
    const auto& s = raw.supplies[l];
    if (s.b.size() != r)
      throw Error(ErrorCode::DimensionMismatch, "supply " + std::to_string(l) + " has " +
                                                    std::to_string(s.b.size()) +
                                                    " quantities, expected " + std::to_string(r));
    if (s.u < 0)
      throw Error(ErrorCode::NegativeSupplyDate, "supply " + std::to_string(l));
    for (Quantity x : s.b)
      if (x < 0) throw Error(ErrorCode::NegativeQuantity, "supply " + std::to_string(l));
  }
  Instance inst;
  inst.resources_ = raw.resources;
  inst.jobs_ = std::move(raw.jobs);
  inst.supplies_ = merge_supplies(std::move(raw.supplies));
  return inst;
}

Schedule back_to_back(const Instance& inst, std::span<const int> order, Time start) {
  Schedule s;
  s.starts.reserve(order.size());
  Time t = start;
  for (int j : order) {
    s.starts.push_back({j, t});
    t += inst.job(j).p;
  }
  return s;
}

std::vector<int> job_order(const Schedule& sched) {
  auto entries = sched.starts;
  std::sort(entries.begin(), entries.end(), [](const ScheduledJob& x, const ScheduledJob& y) {
    return x.start != y.start ? x.start < y.start : x.job < y.job;
  });
  std::vector<int> order;
  order.reserve(entries.size());
  for (const auto& e : entries) order.push_back(e.job);
  return order;
}

Schedule shifted(Schedule sched, Time delta) {
  for (auto& e : sched.starts) e.start += delta;
  return sched;
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  if (v.kind == ViolationKind::Overlap) {
    os << "overlap: job " << v.job << " starts at t=" << v.time
       << " while the machine is busy";
  } else {
    os << "resource_deficit: job " << v.job << " at t=" << v.time << ", resource "
       << v.resource.value_or(-1) << " demand " << v.demand << " > supply " << v.supply;
  }
  return os.str();
}

Quantity cumulative_supply(const Instance& inst, int resource, Time t) {
  if (resource < 0 || resource >= inst.resource_count())
    throw Error(ErrorCode::ResourceIndexOutOfRange, "resource " + std::to_string(resource));
  Quantity total = 0;
  for (const auto& s : inst.supplies()) {
    if (s.u > t) break;
    total += s.b[static_cast<std::size_t>(resource)];
  }
  return total;
}

FeasibilityReport check_feasible(const Instance& inst, const Schedule& sched) {
  const int n = inst.n();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& e : sched.starts) {
    if (e.job < 0 || e.job >= n)
      throw Error(ErrorCode::InvalidJobIndex, "job " + std::to_string(e.job));
    if (e.start < 0)
      throw Error(ErrorCode::NegativeStart, "job " + std::to_string(e.job));
    if (seen[static_cast<std::size_t>(e.job)])
      throw Error(ErrorCode::DuplicateJob, "job " + std::to_string(e.job));
    seen[static_cast<std::size_t>(e.job)] = 1;
  }
  for (int j = 0; j < n; ++j)
    if (!seen[static_cast<std::size_t>(j)])
      throw Error(ErrorCode::MissingJob, "job " + std::to_string(j));

  auto entries = sched.starts;
  std::sort(entries.begin(), entries.end(), [](const ScheduledJob& x, const ScheduledJob& y) {
    return x.start != y.start ? x.start < y.start : x.job < y.job;
  });

  const auto r = static_cast<std::size_t>(inst.resource_count());
  const auto& supplies = inst.supplies();
  ResourceVector demand(r, 0), supply(r, 0);
  std::size_t next_supply = 0;
  Time busy_until = 0;
  FeasibilityReport report;

  for (std::size_t g = 0; g < entries.size();) {
    const Time t = entries[g].start;
    std::size_t end = g;
    while (end < entries.size() && entries[end].start == t) ++end;

    for (std::size_t k = g; k < end; ++k) {
      if (k > g || t < busy_until) {
        report.feasible = false;
        report.first_violation = Violation{ViolationKind::Overlap, entries[k].job, t, {}, 0, 0};
        return report;
      }
    }
    while (next_supply < supplies.size() && supplies[next_supply].u <= t)
      add_into(supply, supplies[next_supply++].b);
    for (std::size_t k = g; k < end; ++k) {
      const Job& job = inst.job(entries[k].job);
      add_into(demand, job.a);
      busy_until = std::max(busy_until, t + job.p);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (demand[i] > supply[i]) {
        report.feasible = false;
        report.first_violation = Violation{ViolationKind::ResourceDeficit, entries[end - 1].job, t,
                                           static_cast<int>(i), demand[i], supply[i]};
        return report;
      }
    }
    g = end;
  }
  return report;
}

bool sequence_feasible(const Instance& inst, std::span<const int> order, Time start) {
  const auto r = static_cast<std::size_t>(inst.resource_count());
  const auto& supplies = inst.supplies();
  ResourceVector demand(r, 0), supply(r, 0);
  std::size_t next_supply = 0;
  Time t = start;
  for (int j : order) {
    while (next_supply < supplies.size() && supplies[next_supply].u <= t)
      add_into(supply, supplies[next_supply++].b);
    const Job& job = inst.job(j);
    for (std::size_t i = 0; i < r; ++i) {
      demand[i] += job.a[i];
      if (demand[i] > supply[i]) return false;
    }
    t += job.p;
  }
  return true;
}

Time makespan(const Schedule& sched, const Instance& inst) {
  Time m = 0;
  for (const auto& e : sched.starts) m = std::max(m, e.start + inst.job(e.job).p);
  return m;
}

NormalizationOutcome normalize(const Instance& inst) {
  for (int i = 0; i < inst.resource_count(); ++i) {
    const Quantity demand = inst.total_demand(i), supply = inst.total_supply(i);
    if (supply < demand)
      throw Error(ErrorCode::InsufficientTotalSupply,
                  "resource " + std::to_string(i) + ": supply " + std::to_string(supply) +
                      " < demand " + std::to_string(demand));
  }

  NormalizationOutcome out;
  RawInstance raw;
  raw.resources = inst.resource_count();
  Time removed_length = 0;
  for (int j = 0; j < inst.n(); ++j) {
    const Job& job = inst.job(j);
    if (all_zero(job.a)) {
      out.removed_jobs.push_back(j);
      removed_length += job.p;
    } else {
      out.kept_jobs.push_back(j);
      raw.jobs.push_back(job);
    }
  }

  std::vector<Supply> moved;
  for (const auto& s : inst.supplies()) {
    if (all_zero(s.b)) continue;
    moved.push_back({std::max<Time>(0, s.u - removed_length), s.b});
  }
  moved = merge_supplies(std::move(moved));
  const Time first = moved.empty() ? 0 : moved.front().u;
  for (auto& s : moved) s.u -= first;
  raw.supplies = std::move(moved);

  out.normalized = validate_instance(std::move(raw));
  out.makespan_offset = removed_length + (out.kept_jobs.empty() ? 0 : first);
  return out;
}

bool is_normalized(const Instance& inst) {
  for (const auto& j : inst.jobs())
    if (all_zero(j.a)) return false;
  for (int i = 0; i < inst.resource_count(); ++i)
    if (inst.total_supply(i) < inst.total_demand(i)) return false;
  if (inst.supplies().empty()) return inst.jobs().empty();
  for (const auto& s : inst.supplies())
    if (all_zero(s.b)) return false;
  return inst.supplies().front().u == 0;
}

Schedule restore_schedule(const NormalizationOutcome& outcome, const Instance& original,
                          const Schedule& normalized_schedule) {
  Schedule out = back_to_back(original, outcome.removed_jobs, 0);
  for (const auto& e : normalized_schedule.starts)
    out.starts.push_back({outcome.kept_jobs.at(static_cast<std::size_t>(e.job)),
                          e.start + outcome.makespan_offset});
  return out;
}

}  // namespace matcon
