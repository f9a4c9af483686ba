#include <doctest.h>

#include <random>

#include "matcon/gapless.hpp"
#include "matcon/oracle.hpp"
#include "matcon/phase_model.hpp"
#include "support.hpp"

using namespace matcon;
using namespace matcon::testing;

namespace {

const CountTable kSampleX{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 2, 1, 0}, {0, 0, 0, 1}};

bool has_violation(const CertificateCheck& c, ConstraintFamily f, int phase = -1) {
  for (const auto& v : c.violations)
    if (v.family == f && (phase < 0 || v.phase == phase)) return true;
  return false;
}

}  // namespace

TEST_CASE("requirement classes of the sample") {
  const auto classes = requirement_classes(sample());
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].key == ResourceVector{1});
  CHECK(classes[0].members == std::vector<int>{1});
  CHECK(classes[1].key == ResourceVector{2});
  CHECK(classes[1].members == std::vector<int>{4, 2});
  CHECK(classes[2].key == ResourceVector{3});
  CHECK(classes[2].members == std::vector<int>{3, 0});
  CHECK(classes[3].key == ResourceVector{6});
  CHECK(classes[3].members == std::vector<int>{5});
}

TEST_CASE("class prefix lengths") {
  const auto classes = requirement_classes(make(1, {{3, {2}}, {1, {2}}, {2, {2}}}, {{0, {6}}}));
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members == std::vector<int>{0, 2, 1});
  CHECK(classes[0].tau_prefix == std::vector<Time>{0, 3, 5, 6});

  const auto distinct = requirement_classes(make(2, {{1, {1, 0}}, {1, {0, 1}}, {1, {1, 1}}}, {{0, {2, 2}}}));
  CHECK(distinct.size() == 3);
}

TEST_CASE("prefix lengths are concave") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 300; ++iter) {
    const Instance inst = random_case(rng, {.max_n = 8, .max_r = 1, .max_p = 5, .max_a = 2});
    for (const auto& c : requirement_classes(inst)) {
      REQUIRE(c.tau_prefix.size() == c.members.size() + 1);
      CHECK(c.tau_prefix[0] == 0);
      for (std::size_t y = 2; y < c.tau_prefix.size(); ++y)
        CHECK(c.tau_prefix[y] - c.tau_prefix[y - 1] <= c.tau_prefix[y - 1] - c.tau_prefix[y - 2]);
    }
  }
}

TEST_CASE("dp on the sample") {
  CHECK_FALSE(dp_gapless(sample()));
  const Instance shifted_sample = shift_supplies(sample(), 2);
  const auto x = dp_gapless(shifted_sample);
  REQUIRE(x);
  const Schedule s = decode_counts(shifted_sample, *x);
  CHECK(naive_feasible(shifted_sample, s));
  CHECK(makespan(s, shifted_sample) == 10);
  CHECK(verify_certificate(shifted_sample, build_certificate(shifted_sample, s)).ok);

  const auto one = dp_gapless(make(1, {{1, {1}}}, {{0, {1}}}));
  REQUIRE(one);
  CHECK(*one == CountTable{{1}});
}

TEST_CASE("decoding the hand-built count table") {
  const Instance shifted_sample = shift_supplies(sample(), 2);
  const Schedule s = decode_counts(shifted_sample, kSampleX);
  // Phase 3 holds both requirement-2 jobs and the short requirement-3 job;
  // its longest job runs last.
  CHECK(s == Schedule{{{1, 0}, {3, 1}, {2, 3}, {0, 4}, {4, 5}, {5, 7}}});
  CHECK(check_feasible(shifted_sample, s).feasible);
  CHECK(makespan(s, shifted_sample) == 10);

  const Instance flat = make(1, {{1, {1}}, {3, {1}}, {2, {2}}}, {{0, {4}}});
  const Schedule f = decode_counts(flat, {{2, 1}});
  CHECK(f.starts.back().job == 1);
  CHECK(decode_counts(make(1, {}, {}), {}) == Schedule{});
}

TEST_CASE("decode rejects malformed tables") {
  const Instance shifted_sample = shift_supplies(sample(), 2);
  CHECK_THROWS_AS(decode_counts(shifted_sample, {{1, 0, 0}}), Error);
  CHECK_THROWS_AS(decode_counts(shifted_sample, {{-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                  Error);
  CHECK_THROWS_AS(decode_counts(shifted_sample, {{2, 0, 0, 0}, {0, 0, 1, 0}, {0, 2, 1, 0}, {0, 0, 0, 1}}),
                  Error);
  CHECK_THROWS_AS(decode_counts(shifted_sample, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 2, 0, 0}, {0, 0, 0, 1}}),
                  Error);
}

TEST_CASE("certificate of the hand-built witness") {
  const Instance shifted_sample = shift_supplies(sample(), 2);
  const PhaseCertificate c = build_certificate(shifted_sample, decode_counts(shifted_sample, kSampleX));
  CHECK(c.x == kSampleX);
  CHECK(c.x_sigma == CountTable{{1, 0, 0, 0}, {1, 0, 1, 0}, {1, 2, 2, 0}, {1, 2, 2, 1}});
  CHECK(c.alpha == CountTable{{3}, {8}, {7}, {6}});
  CHECK(c.d == std::vector<Time>{1, 3, 7, 10});
  CHECK(verify_certificate(shifted_sample, c).ok);

  PhaseCertificate tampered = c;
  tampered.alpha[2][0] = 6;
  const auto check = verify_certificate(shifted_sample, tampered);
  CHECK_FALSE(check.ok);
  CHECK(has_violation(check, ConstraintFamily::Balance, 3));

  PhaseCertificate short_by_one = c;
  short_by_one.x[3][3] = 0;
  const auto cov = verify_certificate(shifted_sample, short_by_one);
  CHECK_FALSE(cov.ok);
  CHECK(has_violation(cov, ConstraintFamily::Coverage));

  PhaseCertificate bad_d = c;
  bad_d.d[1] = 4;
  CHECK(has_violation(verify_certificate(shifted_sample, bad_d), ConstraintFamily::Endpoint, 2));

  PhaseCertificate bad_shape = c;
  bad_shape.alpha.pop_back();
  CHECK(has_violation(verify_certificate(shifted_sample, bad_shape), ConstraintFamily::Shape));
}

TEST_CASE("certificate of tiny instances") {
  const Instance one = make(1, {{2, {1}}}, {{0, {3}}});
  const auto c = build_certificate(one, {{{0, 0}}});
  CHECK(c.x == CountTable{{1}});
  CHECK(c.alpha == CountTable{{3}});
  CHECK(c.d == std::vector<Time>{2});

  const Instance empty = make(1, {}, {});
  const auto e = build_certificate(empty, Schedule{});
  CHECK(e.x.empty());
  CHECK(e.alpha.empty());
  CHECK(e.d.empty());
  CHECK(verify_certificate(empty, e).ok);
}

TEST_CASE("certificates need a gapless feasible schedule") {
  const Instance inst = make(1, {{1, {1}}, {1, {1}}}, {{0, {2}}});
  CHECK_THROWS_AS(build_certificate(inst, {{{0, 0}, {1, 2}}}), Error);
  CHECK_THROWS_AS(build_certificate(sample(), back_to_back(sample(), std::vector<int>{0, 1, 2, 3, 4, 5})),
                  Error);
}

TEST_CASE("state cap") {
  DpOptions tight;
  tight.state_cap = 3;
  try {
    dp_gapless(sample(), tight);
    FAIL("expected StateSpaceExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceExceeded);
  }
  CHECK(dp_state_space(sample()) == 2u * 3u * 3u * 2u * 4u);
}

TEST_CASE("dp agrees with brute force and every witness certifies") {
  std::mt19937_64 rng(62);
  const NiSolver solver{"phase-dp", [](const Instance& i) { return solve_phase_dp(i); }};
  int witnesses = 0;
  for (int iter = 0; iter < 600; ++iter) {
    const Instance inst = random_case(rng, {.max_n = 6, .max_r = 2, .max_q = 4});
    const auto x = dp_gapless(inst);
    CHECK(x.has_value() == reference_gapless(inst));
    CHECK(x.has_value() == solve_ni_prefix_search(inst).has_value());
    if (x) {
      const Schedule s = decode_counts(inst, *x);
      REQUIRE(naive_feasible(inst, s));
      const auto cert = build_certificate(inst, s);
      CHECK(cert.x == *x);
      CHECK(verify_certificate(inst, cert).ok);
      ++witnesses;
    }
    CHECK(solve_cmax(inst, solver).makespan == reference_optimum(inst));
  }
  CHECK(witnesses > 100);
}

TEST_CASE("dp output ignores the order of same-class jobs") {
  std::mt19937_64 rng(63);
  for (int iter = 0; iter < 300; ++iter) {
    const Instance inst = random_case(rng, {.max_n = 6, .max_r = 1, .max_a = 2, .max_q = 3});
    RawInstance raw = inst.raw();
    // Shuffle positions among jobs of equal requirement.
    for (std::size_t x = 0; x < raw.jobs.size(); ++x)
      for (std::size_t y = x + 1; y < raw.jobs.size(); ++y)
        if (raw.jobs[x].a == raw.jobs[y].a && std::uniform_int_distribution<int>(0, 1)(rng))
          std::swap(raw.jobs[x], raw.jobs[y]);
    const Instance permuted = validate_instance(std::move(raw));
    CHECK(dp_gapless(inst) == dp_gapless(permuted));
  }
}
