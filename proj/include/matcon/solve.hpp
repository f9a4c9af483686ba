#pragma once

// One entry point over all solvers: normalizes, dispatches, and maps the
// result back onto the original instance.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "matcon/core.hpp"
#include "matcon/gapless.hpp"
#include "matcon/oracle.hpp"
#include "matcon/phase_model.hpp"

namespace matcon {

enum class Algorithm { Auto, Oracle, Timepoints, Prefix, Domination, UmaxFpt, PhaseDp };

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolveOptions {
  /// `auto` uses the subset solver only when u_max is at most this.
  Time umax_threshold = 20;
  std::uint64_t state_cap = 10'000'000;
  OracleOptions oracle;
};

/// Non-idling solver for the given algorithm. Oracle and Timepoints have no
/// non-idling form and are rejected.
NiSolver ni_solver(Algorithm algo, const SolveOptions& options = {});

/// The algorithm `auto` picks for a normalized instance.
Algorithm choose_algorithm(const Instance& normalized, const SolveOptions& options = {});

/// Optimal makespan and witness for `inst` (not necessarily normalized).
/// `algorithm` in the result names the solver that actually ran.
SolveResult solve(const Instance& inst, Algorithm algo, const SolveOptions& options = {});

}  // namespace matcon
