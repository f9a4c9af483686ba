#include "matcon/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

namespace matcon {

namespace {

void require_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw Error(ErrorCode::CapExceeded, std::string(what) + " handles n <= " +
                                            std::to_string(cap) + ", got n = " +
                                            std::to_string(n));
}

SolveResult make_result(const Instance& inst, Schedule sched, const char* algorithm) {
  SolveResult r;
  r.makespan = makespan(sched, inst);
  r.front_idle = r.makespan - inst.total_processing();
  r.schedule = std::move(sched);
  r.algorithm = algorithm;
  return r;
}

}  // namespace

std::optional<SolveResult> solve_exact_permutations(const Instance& inst,
                                                    const OracleOptions& options) {
  require_cap(inst.n(), options.permutation_cap, "the permutation oracle");
  std::vector<int> perm(static_cast<std::size_t>(inst.n()));
  std::iota(perm.begin(), perm.end(), 0);

  std::optional<Time> best_g;
  std::vector<int> best_perm;
  do {
    const Time limit = best_g ? *best_g - 1 : inst.u_max();
    for (Time g = 0; g <= limit; ++g) {
      if (sequence_feasible(inst, perm, g)) {
        best_g = g;
        best_perm = perm;
        break;
      }
    }
  } while (best_g != Time{0} && std::next_permutation(perm.begin(), perm.end()));

  if (!best_g) return std::nullopt;
  return make_result(inst, back_to_back(inst, best_perm, *best_g), "oracle");
}

std::optional<SolveResult> solve_exact_timepoints(const Instance& inst,
                                                  const OracleOptions& options) {
  require_cap(inst.n(), options.timepoint_job_cap, "the time-point oracle");
  const Time horizon = inst.u_max() + inst.total_processing();
  if (horizon > options.timepoint_horizon_cap)
    throw Error(ErrorCode::CapExceeded, "time-point oracle horizon " + std::to_string(horizon) +
                                            " exceeds " +
                                            std::to_string(options.timepoint_horizon_cap));

  const int n = inst.n();
  const auto r = static_cast<std::size_t>(inst.resource_count());
  std::vector<Time> start(static_cast<std::size_t>(n), -1);
  std::vector<Time> best_start;
  Time best = horizon + 1;

  // Demand only grows as jobs are added, so a deficit in a partial
  // assignment can never be repaired.
  auto resources_ok = [&](int assigned) {
    for (int k = 0; k < assigned; ++k) {
      const Time t = start[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < r; ++i) {
        Quantity demand = 0;
        for (int m = 0; m < assigned; ++m)
          if (start[static_cast<std::size_t>(m)] <= t) demand += inst.job(m).a[i];
        if (demand > cumulative_supply(inst, static_cast<int>(i), t)) return false;
      }
    }
    return true;
  };

  std::function<void(int, Time)> assign = [&](int j, Time end_so_far) {
    if (end_so_far >= best) return;
    if (j == n) {
      best = end_so_far;
      best_start = start;
      return;
    }
    const Time p = inst.job(j).p;
    for (Time s = 0; s + p <= horizon; ++s) {
      bool clash = false;
      for (int k = 0; k < j && !clash; ++k) {
        const Time sk = start[static_cast<std::size_t>(k)];
        clash = s < sk + inst.job(k).p && sk < s + p;
      }
      if (clash) continue;
      start[static_cast<std::size_t>(j)] = s;
      if (resources_ok(j + 1)) assign(j + 1, std::max(end_so_far, s + p));
    }
    start[static_cast<std::size_t>(j)] = -1;
  };
  assign(0, 0);

  if (best > horizon) return std::nullopt;
  Schedule sched;
  for (int j = 0; j < n; ++j) sched.starts.push_back({j, best_start[static_cast<std::size_t>(j)]});
  return make_result(inst, std::move(sched), "timepoints");
}

namespace {

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
    return h;
  }
};

class PrefixSearch {
 public:
  explicit PrefixSearch(const Instance& inst)
      : inst_(inst), n_(inst.n()), r_(static_cast<std::size_t>(inst.resource_count())) {
    tail_order_.resize(static_cast<std::size_t>(n_));
    std::iota(tail_order_.begin(), tail_order_.end(), 0);
    std::sort(tail_order_.begin(), tail_order_.end(), [&](int x, int y) {
      const auto& ax = inst.job(x).a;
      const auto& ay = inst.job(y).a;
      return ax != ay ? ax < ay : x < y;
    });
    // Identical jobs are interchangeable; only the lowest unused index of
    // each (p, a) pair is branched on.
    twin_before_.assign(static_cast<std::size_t>(n_), -1);
    std::map<std::pair<Time, ResourceVector>, int> last_seen;
    for (int j = 0; j < n_; ++j) {
      auto [it, fresh] = last_seen.try_emplace({inst.job(j).p, inst.job(j).a}, j);
      if (!fresh) {
        twin_before_[static_cast<std::size_t>(j)] = it->second;
        it->second = j;
      }
    }
    used_.assign(static_cast<std::size_t>((n_ + 63) / 64), 0);
    demand_.assign(r_, 0);
  }

  std::optional<Schedule> run() {
    if (!dfs(0)) return std::nullopt;
    return back_to_back(inst_, sequence_, 0);
  }

 private:
  bool is_used(int j) const {
    return (used_[static_cast<std::size_t>(j / 64)] >> (j % 64)) & 1U;
  }
  void flip(int j) { used_[static_cast<std::size_t>(j / 64)] ^= std::uint64_t{1} << (j % 64); }

  bool dfs(Time elapsed) {
    if (static_cast<int>(sequence_.size()) == n_) return true;
    if (dead_.count(used_)) return false;
    if (elapsed >= inst_.u_max()) {
      const std::size_t prefix = sequence_.size();
      for (int j : tail_order_)
        if (!is_used(j)) sequence_.push_back(j);
      if (sequence_feasible(inst_, sequence_, 0)) return true;
      sequence_.resize(prefix);
      dead_.insert(used_);
      return false;
    }
    for (int j = 0; j < n_; ++j) {
      if (is_used(j)) continue;
      const int twin = twin_before_[static_cast<std::size_t>(j)];
      if (twin >= 0 && !is_used(twin)) continue;
      const Job& job = inst_.job(j);
      bool fits = true;
      for (std::size_t i = 0; i < r_ && fits; ++i)
        fits = demand_[i] + job.a[i] <= cumulative_supply(inst_, static_cast<int>(i), elapsed);
      if (!fits) continue;
      for (std::size_t i = 0; i < r_; ++i) demand_[i] += job.a[i];
      flip(j);
      sequence_.push_back(j);
      if (dfs(elapsed + job.p)) return true;
      sequence_.pop_back();
      flip(j);
      for (std::size_t i = 0; i < r_; ++i) demand_[i] -= job.a[i];
    }
    dead_.insert(used_);
    return false;
  }

  const Instance& inst_;
  int n_;
  std::size_t r_;
  std::vector<int> tail_order_;
  std::vector<int> twin_before_;
  std::vector<std::uint64_t> used_;
  ResourceVector demand_;
  std::vector<int> sequence_;
  std::unordered_set<std::vector<std::uint64_t>, BitsetHash> dead_;
};

}  // namespace

std::optional<Schedule> solve_ni_prefix_search(const Instance& inst) {
  return PrefixSearch(inst).run();
}

}  // namespace matcon
