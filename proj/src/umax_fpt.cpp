#include "matcon/umax_fpt.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace matcon {

namespace {

// 2^40 break sets is far beyond any practical run.
constexpr Time kMaxHorizon = 40;

// Advances `c` (values in [1, u], strictly increasing) to the next
// combination of the same size in lexicographic order.
bool next_combination(std::vector<Time>& c, Time u) {
  const auto k = static_cast<Time>(c.size());
  for (Time i = k - 1; i >= 0; --i) {
    auto& ci = c[static_cast<std::size_t>(i)];
    if (ci < u - (k - 1 - i)) {
      ++ci;
      for (Time m = i + 1; m < k; ++m)
        c[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m - 1)] + 1;
      return true;
    }
  }
  return false;
}

class SubsetSearch {
 public:
  explicit SubsetSearch(const Instance& inst) : inst_(inst), u_(inst.u_max()) {
    const int n = inst.n();
    by_requirement_.resize(static_cast<std::size_t>(n));
    std::iota(by_requirement_.begin(), by_requirement_.end(), 0);
    std::sort(by_requirement_.begin(), by_requirement_.end(),
              [&](int x, int y) { return less(x, y); });
    // Buckets inherit the (requirement, index) order.
    for (int j : by_requirement_) {
      const Time p = inst.job(j).p;
      if (p <= u_) buckets_[p].push_back(j);
    }
    used_.assign(static_cast<std::size_t>(n), 0);
    taken_.assign(static_cast<std::size_t>(u_ + 1), 0);
    for (Time t = 0; t <= u_; ++t) supply_at_.push_back(cumulative_supply(inst, 0, t));
  }

  std::optional<SubsetWitness> run() {
    for (Time k = 0; k <= u_; ++k) {
      std::vector<Time> c(static_cast<std::size_t>(k));
      std::iota(c.begin(), c.end(), Time{1});
      do {
        if (auto order = attempt(c)) {
          return SubsetWitness{BreakSet{c}, back_to_back(inst_, *order, 0)};
        }
      } while (next_combination(c, u_));
    }
    return std::nullopt;
  }

 private:
  bool less(int x, int y) const {
    const Quantity ax = inst_.job(x).a[0], ay = inst_.job(y).a[0];
    return ax != ay ? ax < ay : x < y;
  }

  std::optional<std::vector<int>> attempt(const std::vector<Time>& breaks) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(taken_.begin(), taken_.end(), 0);
    std::vector<int> order;
    order.reserve(used_.size());

    Time t = 0;
    Quantity demand = 0;
    for (Time r : breaks) {
      auto bucket = buckets_.find(r - t);
      if (bucket == buckets_.end()) return std::nullopt;
      auto& pos = taken_[static_cast<std::size_t>(r - t)];
      if (pos >= bucket->second.size()) return std::nullopt;
      const int j = bucket->second[pos++];
      demand += inst_.job(j).a[0];
      if (demand > supply_at_[static_cast<std::size_t>(t)]) return std::nullopt;
      used_[static_cast<std::size_t>(j)] = 1;
      order.push_back(j);
      t = r;
    }
    if (order.size() == used_.size()) return order;

    // A job starting at the last break point that runs at least until u_max.
    const Quantity available = supply_at_[static_cast<std::size_t>(t)];
    int long_job = -1;
    for (int j : by_requirement_) {
      if (used_[static_cast<std::size_t>(j)]) continue;
      const Job& job = inst_.job(j);
      if (job.p >= u_ - t && demand + job.a[0] <= available) {
        long_job = j;
        break;
      }
    }
    if (long_job < 0) return std::nullopt;
    used_[static_cast<std::size_t>(long_job)] = 1;
    order.push_back(long_job);

    for (int j : by_requirement_)
      if (!used_[static_cast<std::size_t>(j)]) order.push_back(j);
    if (!sequence_feasible(inst_, order, 0)) return std::nullopt;
    return order;
  }

  const Instance& inst_;
  Time u_;
  std::vector<int> by_requirement_;
  std::map<Time, std::vector<int>> buckets_;
  std::vector<char> used_;
  std::vector<std::size_t> taken_;  // jobs consumed per bucket
  std::vector<Quantity> supply_at_;
};

}  // namespace

std::optional<SubsetWitness> solve_ni_subsets_witness(const Instance& inst) {
  if (inst.resource_count() != 1)
    throw Error(ErrorCode::MultiResource, "umax-fpt requires nr=1, got nr=" +
                                              std::to_string(inst.resource_count()));
  if (inst.u_max() > kMaxHorizon)
    throw Error(ErrorCode::CapExceeded, "umax-fpt enumerates 2^u_max break sets; u_max = " +
                                            std::to_string(inst.u_max()) + " exceeds " +
                                            std::to_string(kMaxHorizon));
  return SubsetSearch(inst).run();
}

std::optional<Schedule> solve_ni_subsets(const Instance& inst) {
  auto witness = solve_ni_subsets_witness(inst);
  if (!witness) return std::nullopt;
  return std::move(witness->schedule);
}

}  // namespace matcon
