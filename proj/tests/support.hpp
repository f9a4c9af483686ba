#pragma once

// Shared fixtures and reference implementations for the test suites. The
// references here are written from the problem definition alone and share no
// code with the library solvers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "matcon/core.hpp"

namespace matcon::testing {

inline Instance make(int r, std::vector<Job> jobs, std::vector<Supply> supplies) {
  return validate_instance({r, std::move(jobs), std::move(supplies)});
}

inline Instance sample() {
  return make(1, {{1, {3}}, {1, {1}}, {1, {2}}, {2, {3}}, {2, {2}}, {3, {6}}},
              {{0, {3}}, {3, {6}}, {5, {2}}, {9, {6}}});
}

/// Known optimal schedule of the sample: J3@0, J2@1, J1@3, J5@4, J4@6, J6@9 (1-based jobs).
inline Schedule sample_schedule() {
  return {{{2, 0}, {1, 1}, {0, 3}, {4, 4}, {3, 6}, {5, 9}}};
}

inline Quantity supply_until(const Instance& inst, std::size_t i, Time t) {
  Quantity s = 0;
  for (const auto& sup : inst.supplies())
    if (sup.u <= t) s += sup.b[i];
  return s;
}

/// Feasibility straight from the definition: pairwise non-overlap plus, at
/// every start time, demand of jobs started so far within supply so far.
inline bool naive_feasible(const Instance& inst, const Schedule& sched) {
  const auto& st = sched.starts;
  for (std::size_t x = 0; x < st.size(); ++x)
    for (std::size_t y = x + 1; y < st.size(); ++y) {
      const Time ex = st[x].start + inst.job(st[x].job).p;
      const Time ey = st[y].start + inst.job(st[y].job).p;
      if (st[x].start < ey && st[y].start < ex) return false;
    }
  for (const auto& probe : st)
    for (std::size_t i = 0; i < static_cast<std::size_t>(inst.resource_count()); ++i) {
      Quantity demand = 0;
      for (const auto& s : st)
        if (s.start <= probe.start) demand += inst.job(s.job).a[i];
      if (demand > supply_until(inst, i, probe.start)) return false;
    }
  return true;
}

/// For a fixed job order the earliest-start rule is optimal: each job starts
/// at the first moment after its predecessor ends where the supply covers
/// the accumulated demand. Returns the makespan, or nothing if some job can
/// never start.
inline std::optional<Time> greedy_order_makespan(const Instance& inst, const std::vector<int>& order,
                                                 std::vector<Time>* starts = nullptr) {
  const auto r = static_cast<std::size_t>(inst.resource_count());
  ResourceVector demand(r, 0);
  Time t = 0;
  for (int j : order) {
    for (std::size_t i = 0; i < r; ++i) demand[i] += inst.job(j).a[i];
    auto covered = [&](Time at) {
      for (std::size_t i = 0; i < r; ++i)
        if (demand[i] > supply_until(inst, i, at)) return false;
      return true;
    };
    if (!covered(t)) {
      std::optional<Time> next;
      for (const auto& s : inst.supplies())
        if (s.u > t && covered(s.u)) {
          next = s.u;
          break;
        }
      if (!next) return std::nullopt;
      t = *next;
    }
    if (starts) starts->push_back(t);
    t += inst.job(j).p;
  }
  return t;
}

/// Optimal makespan by trying every job order with the earliest-start rule.
inline std::optional<Time> reference_optimum(const Instance& inst) {
  std::vector<int> order(static_cast<std::size_t>(inst.n()));
  std::iota(order.begin(), order.end(), 0);
  std::optional<Time> best;
  do {
    auto m = greedy_order_makespan(inst, order);
    if (m && (!best || *m < *best)) best = m;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// True iff some order runs back-to-back from 0 feasibly.
inline bool reference_gapless(const Instance& inst) {
  std::optional<Time> best = reference_optimum(inst);
  return best && *best == inst.total_processing();
}

struct GenParams {
  int max_n = 6;
  int max_r = 2;
  Time max_p = 3;
  Quantity max_a = 3;
  int max_q = 4;
  Time max_gap = 3;
  /// Allow zero-requirement jobs and a first supply after 0.
  bool unnormalized = false;
  /// Ensure at least this many jobs.
  int min_n = 0;
};

/// Random instance with enough total supply. With `unnormalized` off the
/// result satisfies all normalization conditions.
inline Instance random_case(std::mt19937_64& rng, const GenParams& g) {
  auto uni = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const int r = static_cast<int>(uni(1, g.max_r));
  const int n = static_cast<int>(uni(g.min_n, g.max_n));
  const int q = static_cast<int>(uni(1, g.max_q));
  RawInstance raw;
  raw.resources = r;
  for (int j = 0; j < n; ++j) {
    Job job{uni(1, g.max_p), ResourceVector(static_cast<std::size_t>(r), 0)};
    const bool zero = g.unnormalized && uni(0, 3) == 0;
    if (!zero) {
      for (auto& x : job.a) x = uni(0, g.max_a);
      if (std::all_of(job.a.begin(), job.a.end(), [](Quantity x) { return x == 0; }))
        job.a[static_cast<std::size_t>(uni(0, r - 1))] = uni(1, g.max_a);
    }
    raw.jobs.push_back(job);
  }
  Time u = g.unnormalized ? uni(0, 3) : 0;
  for (int l = 0; l < q; ++l) {
    if (l) u += uni(1, g.max_gap);
    Supply s{u, ResourceVector(static_cast<std::size_t>(r), 0)};
    for (auto& x : s.b) x = uni(0, g.max_a);
    raw.supplies.push_back(s);
  }
  if (!g.unnormalized) {
    for (auto& s : raw.supplies)
      if (std::all_of(s.b.begin(), s.b.end(), [](Quantity x) { return x == 0; }))
        s.b[static_cast<std::size_t>(uni(0, r - 1))] = 1;
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
    Quantity need = 0, have = 0;
    for (const auto& j : raw.jobs) need += j.a[i];
    for (const auto& s : raw.supplies) have += s.b[i];
    while (have < need) {
      ++raw.supplies[static_cast<std::size_t>(uni(0, q - 1))].b[i];
      ++have;
    }
  }
  return validate_instance(std::move(raw));
}

}  // namespace matcon::testing
