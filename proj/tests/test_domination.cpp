#include <doctest.h>

#include <random>

#include "matcon/domination.hpp"
#include "matcon/gapless.hpp"
#include "support.hpp"

using namespace matcon;
using namespace matcon::testing;

namespace {

bool covers(const Job& x, const Job& y) {
  if (x.p < y.p) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] > y.a[i]) return false;
  return true;
}

/// Every pair comparable.
bool all_pairs_comparable(const Instance& inst) {
  for (int x = 0; x < inst.n(); ++x)
    for (int y = x + 1; y < inst.n(); ++y)
      if (!covers(inst.job(x), inst.job(y)) && !covers(inst.job(y), inst.job(x))) return false;
  return true;
}

Instance random_weak(std::mt19937_64& rng, bool unit_p) {
  // Jobs on a chain: longer jobs need no more of anything.
  auto uni = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const int n = static_cast<int>(uni(1, 6));
  const int r = static_cast<int>(uni(1, 2));
  std::vector<Job> jobs;
  for (int j = 0; j < n; ++j) {
    const Quantity level = uni(1, 4);
    Job job{unit_p ? 1 : 5 - level, ResourceVector(static_cast<std::size_t>(r), level)};
    jobs.push_back(job);
  }
  Quantity need = 0;
  for (const auto& j : jobs) need += j.a[0];
  std::vector<Supply> supplies{{0, ResourceVector(static_cast<std::size_t>(r), uni(1, 3))}};
  Quantity have = supplies[0].b[0];
  Time u = 0;
  while (have < need) {
    u += uni(1, 3);
    const Quantity b = uni(1, 4);
    supplies.push_back({u, ResourceVector(static_cast<std::size_t>(r), b)});
    have += b;
  }
  return make(r, jobs, supplies);
}

}  // namespace

TEST_CASE("dominates") {
  CHECK(dominates({2, {1}}, {1, {2}}) == DominationVerdict::FirstDominates);
  CHECK(dominates({1, {2}}, {2, {1}}) == DominationVerdict::SecondDominates);
  CHECK(dominates({1, {1}}, {1, {1}}) == DominationVerdict::Equal);
  CHECK(dominates({2, {3}}, {1, {1}}) == DominationVerdict::Incomparable);
  CHECK(dominates({2, {1, 2}}, {2, {2, 1}}) == DominationVerdict::Incomparable);
  CHECK(strictly_dominates({2, {1}}, {1, {1}}));
  CHECK_FALSE(strictly_dominates({1, {1}}, {1, {1}}));
}

TEST_CASE("weak order examples") {
  CHECK_FALSE(weak_order(sample()));

  const Instance unit_p = make(1, {{1, {3}}, {1, {1}}, {1, {2}}}, {{0, {6}}});
  const auto c1 = weak_order(unit_p);
  REQUIRE(c1);
  CHECK(c1->ordering == std::vector<int>{1, 2, 0});

  const Instance unit_a = make(1, {{1, {1}}, {3, {1}}, {2, {1}}}, {{0, {3}}});
  const auto c2 = weak_order(unit_a);
  REQUIRE(c2);
  CHECK(c2->ordering == std::vector<int>{1, 2, 0});

  const Instance ties = make(1, {{1, {2}}, {2, {1}}, {1, {2}}}, {{0, {5}}});
  const auto c3 = weak_order(ties);
  REQUIRE(c3);
  CHECK(c3->ordering == std::vector<int>{1, 0, 2});
  CHECK(c3->tie_classes == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
}

TEST_CASE("weak order agrees with the all-pairs test") {
  std::mt19937_64 rng(31);
  int present = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    const Instance inst = random_case(rng, {.max_n = 5, .max_r = 2, .max_p = 2, .max_a = 2});
    const auto cert = weak_order(inst);
    REQUIRE(cert.has_value() == all_pairs_comparable(inst));
    if (!cert) continue;
    ++present;
    // Each job covers everything after it.
    for (std::size_t x = 0; x < cert->ordering.size(); ++x)
      for (std::size_t y = x + 1; y < cert->ordering.size(); ++y)
        CHECK(covers(inst.job(cert->ordering[x]), inst.job(cert->ordering[y])));
    CHECK(weak_order(inst)->ordering == cert->ordering);
  }
  CHECK(present > 100);
}

TEST_CASE("weak-order solver examples") {
  CHECK_FALSE(solve_weak_order_ni(make(1, {{1, {1}}, {1, {3}}, {1, {2}}}, {{0, {2}}, {2, {4}}})));

  const auto s = solve_weak_order_ni(make(1, {{1, {1}}, {1, {3}}, {1, {2}}}, {{0, {6}}}));
  REQUIRE(s);
  CHECK(*s == Schedule{{{0, 0}, {2, 1}, {1, 2}}});

  const auto t = solve_weak_order_ni(make(1, {{3, {1}}, {1, {1}}}, {{0, {2}}}));
  REQUIRE(t);
  CHECK(*t == Schedule{{{0, 0}, {1, 3}}});

  CHECK_THROWS_AS(solve_weak_order_ni(sample()), Error);
}

TEST_CASE("weak-order solver is optimal on chain instances") {
  std::mt19937_64 rng(32);
  const NiSolver solver{"domination", [](const Instance& i) { return solve_weak_order_ni(i); }};
  for (int iter = 0; iter < 600; ++iter) {
    const Instance inst = random_weak(rng, iter % 3 == 0);
    REQUIRE(weak_order(inst));
    CHECK(solve_cmax(inst, solver).makespan == reference_optimum(inst));
  }
}

TEST_CASE("swapping a dominated adjacent pair keeps feasibility") {
  std::mt19937_64 rng(33);
  int swaps = 0;
  for (int iter = 0; iter < 600; ++iter) {
    const Instance inst = random_case(rng, {.max_n = 6, .max_r = 2});
    std::vector<int> order(static_cast<std::size_t>(inst.n()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (Time g = 0; g <= inst.u_max(); ++g) {
      Schedule s = back_to_back(inst, order, g);
      if (!naive_feasible(inst, s)) continue;
      for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        if (!strictly_dominates(inst.job(order[k + 1]), inst.job(order[k]))) continue;
        std::vector<int> swapped = order;
        std::swap(swapped[k], swapped[k + 1]);
        CHECK(naive_feasible(inst, back_to_back(inst, swapped, g)));
        ++swaps;
      }
      break;
    }
  }
  CHECK(swaps > 100);
}

TEST_CASE("large unit instances") {
  std::mt19937_64 rng(34);
  RawInstance raw;
  Quantity total = 0;
  for (int j = 0; j < 100000; ++j) {
    const Quantity a = std::uniform_int_distribution<Quantity>(1, 5)(rng);
    raw.jobs.push_back({1, {a}});
    total += a;
  }
  raw.supplies.push_back({0, {total}});
  const Instance inst = validate_instance(std::move(raw));
  const auto s = solve_weak_order_ni(inst);
  REQUIRE(s);
  CHECK(check_feasible(inst, *s).feasible);
}
