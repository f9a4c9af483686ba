#pragma once

// Phase-count characterization of non-idling schedules.
//
// Phase w is the interval [u_w, u_{w+1}) between consecutive supply dates
// (the last phase is unbounded); a job belongs to the phase containing its
// start. Jobs sharing a requirement vector form a class, and within a class
// the longer job can always go first, so a non-idling schedule is described
// up to equivalence by how many jobs of each class start in each phase.
//
// dp_gapless searches those count tables phase by phase. verify_certificate
// checks an explicit table against the integer constraint system:
//
//   prefix        x_sigma[w][s] = sum_{w' <= w} x[w'][s]
//   coverage      sum_w x[w][s] = |class s|
//   balance       alpha[1] = b[1],
//                 alpha[w] = alpha[w-1] + b[w] - sum_s x[w-1][s] * s
//   availability  alpha[w] >= b[w]                       (2 <= w <= q)
//   endpoint      d[w] = sum_s tau_s(x_sigma[w][s])
//   no_gap        d[w] >= u[w+1] - 1                      (w before the last
//                                                          non-empty phase)
//
// where tau_s(y) is the total length of the y longest jobs of class s.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matcon/core.hpp"

namespace matcon {

using Count = std::int64_t;
/// table[w][s]: phase-major, one column per requirement class.
using CountTable = std::vector<std::vector<Count>>;

struct RequirementClass {
  ResourceVector key;
  /// Job indices by processing time non-increasing (ties by index).
  std::vector<int> members;
  /// tau_prefix[y] = total length of the y longest members; size members+1.
  std::vector<Time> tau_prefix;

  Count size() const noexcept { return static_cast<Count>(members.size()); }
};

/// One class per distinct requirement vector, ordered lexicographically.
std::vector<RequirementClass> requirement_classes(const Instance& inst);

struct PhaseCertificate {
  CountTable x;
  CountTable x_sigma;
  /// alpha[w][i]: units of resource i available when phase w begins.
  CountTable alpha;
  std::vector<Time> d;

  bool operator==(const PhaseCertificate&) const = default;
};

enum class ConstraintFamily { Shape, Prefix, Coverage, Balance, Availability, Endpoint, NoGap };

std::string_view to_string(ConstraintFamily family);

struct CertificateViolation {
  ConstraintFamily family = ConstraintFamily::Shape;
  /// 1-based phase, 0 when not phase specific.
  int phase = 0;
  /// Class index for x-based families, resource index for balance and
  /// availability, -1 otherwise.
  int index = -1;
  std::string detail;
};

struct CertificateCheck {
  bool ok = true;
  std::vector<CertificateViolation> violations;
};

struct DpOptions {
  /// Upper bound on (number of count vectors) x (number of phases).
  std::uint64_t state_cap = 10'000'000;
};

/// Number of count vectors times number of phases; saturates at UINT64_MAX.
std::uint64_t dp_state_space(const Instance& inst);

/// Per-phase class counts of a schedule that runs back-to-back from 0, or
/// empty if none exists. Throws StateSpaceExceeded above the cap.
std::optional<CountTable> dp_gapless(const Instance& inst, const DpOptions& options = {});

/// Back-to-back schedule from 0 realizing `x`: classes are consumed longest
/// first across phases; inside a phase the selected jobs run in class order
/// except that the phase's longest job is moved to the end.
Schedule decode_counts(const Instance& inst, const CountTable& x);

/// Reads the count table, balances and phase endpoints off a feasible
/// schedule that runs back-to-back from 0. Throws ScheduleHasIdle or
/// ScheduleInfeasible otherwise.
PhaseCertificate build_certificate(const Instance& inst, const Schedule& sched);

CertificateCheck verify_certificate(const Instance& inst, const PhaseCertificate& cert);

/// dp_gapless followed by decode_counts; usable as a non-idling solver.
std::optional<Schedule> solve_phase_dp(const Instance& inst, const DpOptions& options = {});

}  // namespace matcon
