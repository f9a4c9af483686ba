#include <doctest.h>

#include <random>

#include "matcon/gapless.hpp"
#include "matcon/oracle.hpp"
#include "matcon/reductions.hpp"
#include "support.hpp"

using namespace matcon;
using namespace matcon::testing;

TEST_CASE("permutation oracle examples") {
  const auto sol = solve_exact_permutations(sample());
  REQUIRE(sol);
  CHECK(sol->makespan == 12);
  CHECK(sol->front_idle == 2);
  CHECK(sol->algorithm == "oracle");
  CHECK(naive_feasible(sample(), sol->schedule));

  const auto two = solve_exact_permutations(make(1, {{1, {1}}, {1, {1}}}, {{0, {1}}, {2, {1}}}));
  REQUIRE(two);
  CHECK(two->makespan == 3);

  const auto none = solve_exact_permutations(make(1, {}, {}));
  REQUIRE(none);
  CHECK(none->makespan == 0);
}

TEST_CASE("time-point oracle examples") {
  const auto big = sample();
  OracleOptions wide;
  wide.timepoint_job_cap = 6;
  const auto sol = solve_exact_timepoints(big, wide);
  REQUIRE(sol);
  CHECK(sol->makespan == 12);

  CHECK(solve_exact_timepoints(make(1, {{1, {1}}}, {{0, {1}}}))->makespan == 1);
  CHECK(solve_exact_timepoints(make(1, {{1, {1}}, {1, {1}}}, {{0, {1}}, {2, {1}}}))->makespan == 3);
}

TEST_CASE("oracle caps") {
  CHECK_THROWS_AS(solve_exact_timepoints(sample()), Error);
  std::vector<Job> many(9, Job{1, {1}});
  const Instance nine = make(1, many, {{0, {9}}});
  try {
    solve_exact_permutations(nine);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("prefix search examples") {
  CHECK_FALSE(solve_ni_prefix_search(sample()));
  const auto shifted_sample = shift_supplies(sample(), 2);
  const auto s = solve_ni_prefix_search(shifted_sample);
  REQUIRE(s);
  CHECK(check_feasible(shifted_sample, *s).feasible);

  const auto k3 = reduce_independent_set({3, {{0, 1}, {1, 2}, {0, 2}}, 1});
  const auto w = solve_ni_prefix_search(k3.instance);
  REQUIRE(w);
  CHECK(makespan(*w, k3.instance) == 3);

  CHECK_FALSE(solve_ni_prefix_search(make(1, {{1, {2}}, {1, {2}}}, {{0, {2}}, {1, {1}}, {2, {1}}})));
}

TEST_CASE("oracles agree with the reference") {
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 400; ++iter) {
    const Instance inst = random_case(rng, {.max_n = 5, .max_r = 2, .max_q = 3});
    const auto expected = reference_optimum(inst);
    const auto perm = solve_exact_permutations(inst);
    REQUIRE(perm.has_value() == expected.has_value());
    if (!perm) continue;
    CHECK(perm->makespan == *expected);
    CHECK(perm->makespan == makespan(perm->schedule, inst));
    CHECK(naive_feasible(inst, perm->schedule));

    if (inst.u_max() + inst.total_processing() <= 64) {
      const auto tp = solve_exact_timepoints(inst);
      REQUIRE(tp);
      CHECK(tp->makespan == *expected);
      CHECK(naive_feasible(inst, tp->schedule));
    }

    const auto prefix = solve_ni_prefix_search(inst);
    CHECK(prefix.has_value() == (perm->front_idle == 0));
    if (prefix) CHECK(naive_feasible(inst, *prefix));
  }
}

TEST_CASE("prefix search handles identical jobs") {
  std::vector<Job> jobs(14, Job{1, {1}});
  jobs.push_back({2, {3}});
  std::vector<Supply> supplies;
  for (Time t = 0; t < 17; ++t) supplies.push_back({t, {1}});
  const Instance inst = make(1, jobs, supplies);
  const auto s = solve_ni_prefix_search(inst);
  CHECK_FALSE(s);
  const auto ok = solve_ni_prefix_search(shift_supplies(inst, 2));
  REQUIRE(ok);
  CHECK(check_feasible(shift_supplies(inst, 2), *ok).feasible);
}
