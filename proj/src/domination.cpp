#include "matcon/domination.hpp"

#include <algorithm>
#include <numeric>

namespace matcon {

namespace {

bool weakly_dominates(const Job& x, const Job& y) {
  if (x.p < y.p) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] > y.a[i]) return false;
  return true;
}

}  // namespace

DominationVerdict dominates(const Job& first, const Job& second) {
  if (first.a.size() != second.a.size())
    throw Error(ErrorCode::DimensionMismatch, "jobs have different resource dimensions");
  const bool fwd = weakly_dominates(first, second);
  const bool bwd = weakly_dominates(second, first);
  if (fwd && bwd) return DominationVerdict::Equal;
  if (fwd) return DominationVerdict::FirstDominates;
  if (bwd) return DominationVerdict::SecondDominates;
  return DominationVerdict::Incomparable;
}

bool strictly_dominates(const Job& first, const Job& second) {
  return dominates(first, second) == DominationVerdict::FirstDominates;
}

std::optional<WeakOrderCertificate> weak_order(const Instance& inst) {
  const auto& jobs = inst.jobs();
  std::vector<int> order(jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const Job& jx = jobs[static_cast<std::size_t>(x)];
    const Job& jy = jobs[static_cast<std::size_t>(y)];
    if (jx.p != jy.p) return jx.p > jy.p;
    if (jx.a != jy.a) return jx.a < jy.a;
    return x < y;
  });

  WeakOrderCertificate cert;
  const int n = static_cast<int>(order.size());
  int block_begin = 0;
  for (int k = 1; k < n; ++k) {
    const Job& prev = jobs[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)])];
    const Job& cur = jobs[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    switch (dominates(prev, cur)) {
      case DominationVerdict::Equal:
        break;
      case DominationVerdict::FirstDominates:
        cert.tie_classes.emplace_back(block_begin, k);
        block_begin = k;
        break;
      default:
        return std::nullopt;
    }
  }
  if (n > 0) cert.tie_classes.emplace_back(block_begin, n);
  cert.ordering = std::move(order);
  return cert;
}

std::optional<Schedule> solve_weak_order_ni(const Instance& inst) {
  auto cert = weak_order(inst);
  if (!cert) throw Error(ErrorCode::NotWeaklyOrdered, "domination is not a weak order on the jobs");
  if (!sequence_feasible(inst, cert->ordering, 0)) return std::nullopt;
  return back_to_back(inst, cert->ordering, 0);
}

}  // namespace matcon
