#include "matcon/gapless.hpp"

#include <algorithm>

namespace matcon {

Instance shift_supplies(const Instance& inst, Time g) {
  RawInstance raw = inst.raw();
  for (auto& s : raw.supplies) s.u = std::max<Time>(0, s.u - g);
  return validate_instance(std::move(raw));
}

std::optional<FrontIdleSolution> min_front_idle(const Instance& inst, const NiSolver& solver,
                                                bool require_exact) {
  if (require_exact && !solver.exact)
    throw Error(ErrorCode::SolverIncomplete,
                "solver '" + solver.name + "' is not exact; binary search needs an exact solver");

  auto probe = [&](Time g) { return solver.solve(shift_supplies(inst, g)); };

  Time hi = inst.u_max();
  auto best = probe(hi);
  if (!best) return std::nullopt;
  // Invariant: probe(hi) succeeded with witness `best`; every g < lo failed.
  Time lo = 0;
  while (lo < hi) {
    const Time mid = lo + (hi - lo) / 2;
    if (auto found = probe(mid)) {
      hi = mid;
      best = std::move(found);
    } else {
      lo = mid + 1;
    }
  }
  return FrontIdleSolution{hi, shifted(std::move(*best), hi)};
}

std::optional<FrontIdleSolution> min_front_idle(const Instance& inst, std::span<const int> order) {
  Time lo = 0, hi = inst.u_max();
  if (!sequence_feasible(inst, order, hi)) return std::nullopt;
  while (lo < hi) {
    const Time mid = lo + (hi - lo) / 2;
    if (sequence_feasible(inst, order, mid)) hi = mid;
    else lo = mid + 1;
  }
  return FrontIdleSolution{hi, back_to_back(inst, order, hi)};
}

SolveResult solve_cmax(const Instance& inst, const NiSolver& solver) {
  auto solution = min_front_idle(inst, solver);
  if (!solution)
    throw Error(ErrorCode::Infeasible, "no feasible schedule exists (solver '" + solver.name + "')");
  SolveResult result;
  result.front_idle = solution->g;
  result.makespan = solution->g + inst.total_processing();
  result.schedule = std::move(solution->schedule);
  result.algorithm = solver.name;
  return result;
}

}  // namespace matcon
