#include "matcon/solve.hpp"

#include <array>
#include <utility>

#include "matcon/domination.hpp"
#include "matcon/umax_fpt.hpp"

namespace matcon {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kNames{{
    {Algorithm::Auto, "auto"},
    {Algorithm::Oracle, "oracle"},
    {Algorithm::Timepoints, "timepoints"},
    {Algorithm::Prefix, "prefix"},
    {Algorithm::Domination, "domination"},
    {Algorithm::UmaxFpt, "umax-fpt"},
    {Algorithm::PhaseDp, "phase-dp"},
}};

}  // namespace

std::string_view to_string(Algorithm algo) {
  for (auto [a, name] : kNames)
    if (a == algo) return name;
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto [a, n] : kNames)
    if (n == name) return a;
  return std::nullopt;
}

NiSolver ni_solver(Algorithm algo, const SolveOptions& options) {
  switch (algo) {
    case Algorithm::Prefix:
      return {"prefix", [](const Instance& i) { return solve_ni_prefix_search(i); }};
    case Algorithm::Domination:
      return {"domination", [](const Instance& i) { return solve_weak_order_ni(i); }};
    case Algorithm::UmaxFpt:
      return {"umax-fpt", [](const Instance& i) { return solve_ni_subsets(i); }};
    case Algorithm::PhaseDp: {
      DpOptions dp{options.state_cap};
      return {"phase-dp", [dp](const Instance& i) { return solve_phase_dp(i, dp); }};
    }
    default:
      throw Error(ErrorCode::InvalidBase,
                  std::string(to_string(algo)) + " has no non-idling solver form");
  }
}

Algorithm choose_algorithm(const Instance& normalized, const SolveOptions& options) {
  if (weak_order(normalized)) return Algorithm::Domination;
  if (normalized.resource_count() == 1 && normalized.u_max() <= options.umax_threshold)
    return Algorithm::UmaxFpt;
  if (dp_state_space(normalized) <= options.state_cap) return Algorithm::PhaseDp;
  return Algorithm::Prefix;
}

SolveResult solve(const Instance& inst, Algorithm algo, const SolveOptions& options) {
  // Preconditions that do not depend on normalization are reported first.
  if (algo == Algorithm::UmaxFpt && inst.resource_count() != 1)
    throw Error(ErrorCode::MultiResource, "umax-fpt requires nr=1, got nr=" +
                                              std::to_string(inst.resource_count()));

  const NormalizationOutcome norm = normalize(inst);
  const Instance& work = norm.normalized;
  if (algo == Algorithm::Auto) algo = choose_algorithm(work, options);

  SolveResult inner;
  if (algo == Algorithm::Oracle || algo == Algorithm::Timepoints) {
    auto found = algo == Algorithm::Oracle ? solve_exact_permutations(work, options.oracle)
                                           : solve_exact_timepoints(work, options.oracle);
    if (!found) throw Error(ErrorCode::Infeasible, "no feasible schedule exists");
    inner = std::move(*found);
  } else if (algo == Algorithm::Domination) {
    // The order depends on the jobs only, so it is computed once for all g.
    const auto cert = weak_order(work);
    if (!cert) throw Error(ErrorCode::NotWeaklyOrdered, "domination is not a weak order on the jobs");
    auto found = min_front_idle(work, cert->ordering);
    if (!found) throw Error(ErrorCode::Infeasible, "no feasible schedule exists");
    inner.schedule = std::move(found->schedule);
  } else {
    inner = solve_cmax(work, ni_solver(algo, options));
  }

  SolveResult out;
  out.schedule = restore_schedule(norm, inst, inner.schedule);
  out.makespan = makespan(out.schedule, inst);
  out.front_idle = out.makespan - inst.total_processing();
  out.algorithm = std::string(to_string(algo));
  return out;
}

}  // namespace matcon
