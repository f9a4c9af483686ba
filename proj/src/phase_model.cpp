#include "matcon/phase_model.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace matcon {

std::string_view to_string(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::Shape: return "shape";
    case ConstraintFamily::Prefix: return "prefix";
    case ConstraintFamily::Coverage: return "coverage";
    case ConstraintFamily::Balance: return "balance";
    case ConstraintFamily::Availability: return "availability";
    case ConstraintFamily::Endpoint: return "endpoint";
    case ConstraintFamily::NoGap: return "no_gap";
  }
  return "unknown";
}

std::vector<RequirementClass> requirement_classes(const Instance& inst) {
  std::map<ResourceVector, std::vector<int>> groups;
  for (int j = 0; j < inst.n(); ++j) groups[inst.job(j).a].push_back(j);

  std::vector<RequirementClass> classes;
  classes.reserve(groups.size());
  for (auto& [key, members] : groups) {
    std::stable_sort(members.begin(), members.end(),
                     [&](int x, int y) { return inst.job(x).p > inst.job(y).p; });
    RequirementClass c;
    c.key = key;
    c.tau_prefix.push_back(0);
    for (int j : members) c.tau_prefix.push_back(c.tau_prefix.back() + inst.job(j).p);
    c.members = std::move(members);
    classes.push_back(std::move(c));
  }
  return classes;
}

namespace {

using State = std::uint64_t;

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x)
    return std::numeric_limits<std::uint64_t>::max();
  return x * y;
}

// Count vectors encoded in mixed radix (digit s ranges over 0..|class s|).
class StateCodec {
 public:
  explicit StateCodec(const std::vector<RequirementClass>& classes) : classes_(classes) {
    State stride = 1;
    for (const auto& c : classes) {
      strides_.push_back(stride);
      stride *= static_cast<State>(c.size() + 1);
    }
    full_ = 0;
    for (std::size_t s = 0; s < classes.size(); ++s)
      full_ += strides_[s] * static_cast<State>(classes[s].size());
  }

  State stride(std::size_t s) const { return strides_[s]; }
  State full() const { return full_; }

  Count digit(State x, std::size_t s) const {
    return static_cast<Count>((x / strides_[s]) % static_cast<State>(classes_[s].size() + 1));
  }

  Time length(State x) const {
    Time total = 0;
    for (std::size_t s = 0; s < classes_.size(); ++s)
      total += classes_[s].tau_prefix[static_cast<std::size_t>(digit(x, s))];
    return total;
  }

 private:
  const std::vector<RequirementClass>& classes_;
  std::vector<State> strides_;
  State full_ = 0;
};

bool fits(const ResourceVector& demand, const ResourceVector& supply) {
  for (std::size_t i = 0; i < demand.size(); ++i)
    if (demand[i] > supply[i]) return false;
  return true;
}

std::vector<ResourceVector> cumulative_supplies(const Instance& inst) {
  std::vector<ResourceVector> out;
  ResourceVector acc(static_cast<std::size_t>(inst.resource_count()), 0);
  for (const auto& s : inst.supplies()) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s.b[i];
    out.push_back(acc);
  }
  return out;
}

void require_phase_start_at_zero(const Instance& inst) {
  if (!inst.supplies().empty() && inst.supplies().front().u != 0)
    throw Error(ErrorCode::NotNormalized, "first supply must be at time 0");
}

}  // namespace

std::uint64_t dp_state_space(const Instance& inst) {
  std::uint64_t total = 1;
  for (const auto& c : requirement_classes(inst))
    total = saturating_mul(total, static_cast<std::uint64_t>(c.size() + 1));
  return saturating_mul(total, static_cast<std::uint64_t>(std::max(1, inst.q())));
}

std::optional<CountTable> dp_gapless(const Instance& inst, const DpOptions& options) {
  require_phase_start_at_zero(inst);
  const auto classes = requirement_classes(inst);
  const std::size_t q = inst.supplies().size();
  const std::size_t num_classes = classes.size();
  if (inst.n() == 0) return CountTable(q, std::vector<Count>{});
  if (q == 0) return std::nullopt;

  const std::uint64_t space = dp_state_space(inst);
  if (space > options.state_cap)
    throw Error(ErrorCode::StateSpaceExceeded,
                "phase DP needs " + std::to_string(space) + " states, cap is " +
                    std::to_string(options.state_cap) + "; try --algo prefix");

  const StateCodec codec(classes);
  const auto supply = cumulative_supplies(inst);
  const auto r = static_cast<std::size_t>(inst.resource_count());

  auto demand_of = [&](State x) {
    ResourceVector d(r, 0);
    for (std::size_t s = 0; s < num_classes; ++s) {
      const Count c = codec.digit(x, s);
      for (std::size_t i = 0; i < r; ++i) d[i] += c * classes[s].key[i];
    }
    return d;
  };

  // origin[w][x]: the state after phase w-1 that phase w extended to reach x.
  std::vector<std::unordered_map<State, State>> origin(q);
  std::vector<State> seeds{0};
  std::size_t done_phase = q;

  for (std::size_t w = 0; w < q; ++w) {
    const bool last = w + 1 == q;
    const Time next_date = last ? 0 : inst.supplies()[w + 1].u;
    auto& reached = origin[w];
    std::deque<State> queue;
    for (State y : seeds) {
      reached.emplace(y, y);
      queue.push_back(y);
    }
    while (!queue.empty()) {
      const State cur = queue.front();
      queue.pop_front();
      if (!last && codec.length(cur) > next_date - 1) continue;
      const ResourceVector base = demand_of(cur);
      for (std::size_t s = 0; s < num_classes; ++s) {
        if (codec.digit(cur, s) == classes[s].size()) continue;
        ResourceVector d = base;
        for (std::size_t i = 0; i < r; ++i) d[i] += classes[s].key[i];
        if (!fits(d, supply[w])) continue;
        const State nxt = cur + codec.stride(s);
        if (reached.emplace(nxt, reached.at(cur)).second) queue.push_back(nxt);
      }
    }

    // Keep states whose next job would start in a later phase.
    std::vector<State> kept;
    for (const auto& [x, from] : reached) {
      if (x == codec.full() || (!last && codec.length(x) >= next_date)) kept.push_back(x);
    }
    std::sort(kept.begin(), kept.end());
    if (kept.empty()) return std::nullopt;
    if (std::binary_search(kept.begin(), kept.end(), codec.full())) {
      done_phase = w;
      break;
    }
    if (last) return std::nullopt;
    seeds = std::move(kept);
  }
  if (done_phase == q) return std::nullopt;

  CountTable x(q, std::vector<Count>(num_classes, 0));
  State cur = codec.full();
  for (std::size_t w = done_phase + 1; w-- > 0;) {
    const State from = origin[w].at(cur);
    for (std::size_t s = 0; s < num_classes; ++s)
      x[w][s] = codec.digit(cur, s) - codec.digit(from, s);
    cur = from;
  }

  if (!check_feasible(inst, decode_counts(inst, x)).feasible)
    throw std::logic_error("phase DP produced a count table whose decoded schedule is infeasible");
  return x;
}

Schedule decode_counts(const Instance& inst, const CountTable& x) {
  const auto classes = requirement_classes(inst);
  std::vector<Count> used(classes.size(), 0);
  for (const auto& row : x) {
    if (row.size() != classes.size())
      throw Error(ErrorCode::DimensionMismatch,
                  "count table has " + std::to_string(row.size()) + " columns, expected " +
                      std::to_string(classes.size()));
    for (std::size_t s = 0; s < classes.size(); ++s) {
      if (row[s] < 0) throw Error(ErrorCode::NegativeQuantity, "negative count");
      used[s] += row[s];
      if (used[s] > classes[s].size())
        throw Error(ErrorCode::CountOverflow,
                    "class " + std::to_string(s) + " has only " +
                        std::to_string(classes[s].size()) + " jobs");
    }
  }
  for (std::size_t s = 0; s < classes.size(); ++s)
    if (used[s] != classes[s].size())
      throw Error(ErrorCode::MissingJob, "count table leaves jobs of class " + std::to_string(s) +
                                             " unscheduled");

  std::vector<int> order;
  std::fill(used.begin(), used.end(), 0);
  for (const auto& row : x) {
    std::vector<int> phase;
    for (std::size_t s = 0; s < classes.size(); ++s) {
      for (Count k = 0; k < row[s]; ++k)
        phase.push_back(classes[s].members[static_cast<std::size_t>(used[s] + k)]);
      used[s] += row[s];
    }
    if (phase.empty()) continue;
    auto longest = std::max_element(phase.begin(), phase.end(), [&](int a, int b) {
      return inst.job(a).p < inst.job(b).p;
    });
    std::rotate(longest, longest + 1, phase.end());
    order.insert(order.end(), phase.begin(), phase.end());
  }
  return back_to_back(inst, order, 0);
}

PhaseCertificate build_certificate(const Instance& inst, const Schedule& sched) {
  const auto report = check_feasible(inst, sched);
  const auto order = job_order(sched);
  std::vector<Time> start(static_cast<std::size_t>(inst.n()));
  for (const auto& e : sched.starts) start[static_cast<std::size_t>(e.job)] = e.start;
  Time t = 0;
  for (int j : order) {
    if (start[static_cast<std::size_t>(j)] != t)
      throw Error(ErrorCode::ScheduleHasIdle,
                  "job " + std::to_string(j) + " starts at " +
                      std::to_string(start[static_cast<std::size_t>(j)]) + ", expected " +
                      std::to_string(t));
    t += inst.job(j).p;
  }
  if (!report.feasible)
    throw Error(ErrorCode::ScheduleInfeasible, describe(*report.first_violation));
  require_phase_start_at_zero(inst);

  const auto classes = requirement_classes(inst);
  std::vector<std::size_t> class_of(static_cast<std::size_t>(inst.n()));
  for (std::size_t s = 0; s < classes.size(); ++s)
    for (int j : classes[s].members) class_of[static_cast<std::size_t>(j)] = s;

  const auto& supplies = inst.supplies();
  const std::size_t q = supplies.size();
  const auto r = static_cast<std::size_t>(inst.resource_count());

  PhaseCertificate cert;
  cert.x.assign(q, std::vector<Count>(classes.size(), 0));
  cert.d.assign(q, 0);
  std::vector<char> nonempty(q, 0);
  std::size_t w = 0;
  for (int j : order) {
    const Time s = start[static_cast<std::size_t>(j)];
    while (w + 1 < q && supplies[w + 1].u <= s) ++w;
    ++cert.x[w][class_of[static_cast<std::size_t>(j)]];
    cert.d[w] = std::max(cert.d[w], s + inst.job(j).p);
    nonempty[w] = 1;
  }
  for (std::size_t k = 0; k < q; ++k)
    if (!nonempty[k]) cert.d[k] = k == 0 ? 0 : cert.d[k - 1];

  cert.x_sigma = cert.x;
  for (std::size_t k = 1; k < q; ++k)
    for (std::size_t s = 0; s < classes.size(); ++s) cert.x_sigma[k][s] += cert.x_sigma[k - 1][s];

  cert.alpha.assign(q, std::vector<Count>(r, 0));
  for (std::size_t k = 0; k < q; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      Count value = supplies[k].b[i];
      if (k > 0) {
        value += cert.alpha[k - 1][i];
        for (std::size_t s = 0; s < classes.size(); ++s)
          value -= cert.x[k - 1][s] * classes[s].key[i];
      }
      cert.alpha[k][i] = value;
    }
  }
  return cert;
}

CertificateCheck verify_certificate(const Instance& inst, const PhaseCertificate& cert) {
  const auto classes = requirement_classes(inst);
  const auto& supplies = inst.supplies();
  const std::size_t q = supplies.size();
  const std::size_t num_classes = classes.size();
  const auto r = static_cast<std::size_t>(inst.resource_count());

  CertificateCheck check;
  auto fail = [&](ConstraintFamily f, int phase, int index, std::string detail) {
    check.ok = false;
    check.violations.push_back({f, phase, index, std::move(detail)});
  };

  auto table_ok = [&](const CountTable& t, std::size_t cols, const char* name) {
    if (t.size() != q) {
      fail(ConstraintFamily::Shape, 0, -1,
           std::string(name) + " has " + std::to_string(t.size()) + " rows, expected " +
               std::to_string(q));
      return;
    }
    for (std::size_t w = 0; w < q; ++w) {
      if (t[w].size() != cols) {
        fail(ConstraintFamily::Shape, static_cast<int>(w + 1), -1,
             std::string(name) + " row has " + std::to_string(t[w].size()) +
                 " entries, expected " + std::to_string(cols));
        continue;
      }
      for (std::size_t c = 0; c < cols; ++c)
        if (t[w][c] < 0)
          fail(ConstraintFamily::Shape, static_cast<int>(w + 1), static_cast<int>(c),
               std::string(name) + " entry is negative");
    }
  };
  table_ok(cert.x, num_classes, "x");
  table_ok(cert.x_sigma, num_classes, "x_sigma");
  table_ok(cert.alpha, r, "alpha");
  if (cert.d.size() != q)
    fail(ConstraintFamily::Shape, 0, -1, "d has " + std::to_string(cert.d.size()) + " entries");
  for (std::size_t w = 0; w < cert.d.size(); ++w)
    if (cert.d[w] < 0) fail(ConstraintFamily::Shape, static_cast<int>(w + 1), -1, "d is negative");
  if (!check.ok) return check;

  const auto phase = [](std::size_t w) { return static_cast<int>(w + 1); };

  for (std::size_t s = 0; s < num_classes; ++s) {
    Count running = 0;
    for (std::size_t w = 0; w < q; ++w) {
      running += cert.x[w][s];
      if (cert.x_sigma[w][s] != running)
        fail(ConstraintFamily::Prefix, phase(w), static_cast<int>(s),
             "x_sigma = " + std::to_string(cert.x_sigma[w][s]) + ", prefix sum = " +
                 std::to_string(running));
    }
    if (running != classes[s].size())
      fail(ConstraintFamily::Coverage, 0, static_cast<int>(s),
           "class covers " + std::to_string(running) + " of " + std::to_string(classes[s].size()) +
               " jobs");
  }

  for (std::size_t w = 0; w < q; ++w) {
    for (std::size_t i = 0; i < r; ++i) {
      Count expected = supplies[w].b[i];
      if (w > 0) {
        expected += cert.alpha[w - 1][i];
        for (std::size_t s = 0; s < num_classes; ++s)
          expected -= cert.x[w - 1][s] * classes[s].key[i];
      }
      if (cert.alpha[w][i] != expected)
        fail(ConstraintFamily::Balance, phase(w), static_cast<int>(i),
             "alpha = " + std::to_string(cert.alpha[w][i]) + ", recurrence gives " +
                 std::to_string(expected));
      if (w > 0 && cert.alpha[w][i] < supplies[w].b[i])
        fail(ConstraintFamily::Availability, phase(w), static_cast<int>(i),
             "alpha = " + std::to_string(cert.alpha[w][i]) + " < supplied " +
                 std::to_string(supplies[w].b[i]));
    }
  }

  for (std::size_t w = 0; w < q; ++w) {
    Time expected = 0;
    for (std::size_t s = 0; s < num_classes; ++s) {
      const Count y = std::clamp<Count>(cert.x_sigma[w][s], 0, classes[s].size());
      expected += classes[s].tau_prefix[static_cast<std::size_t>(y)];
    }
    if (cert.d[w] != expected)
      fail(ConstraintFamily::Endpoint, phase(w), -1,
           "d = " + std::to_string(cert.d[w]) + ", longest-first lengths sum to " +
               std::to_string(expected));
  }

  std::size_t last_nonempty = 0;
  bool any = false;
  for (std::size_t w = 0; w < q; ++w) {
    const Count used = std::accumulate(cert.x[w].begin(), cert.x[w].end(), Count{0});
    if (used > 0) {
      last_nonempty = w;
      any = true;
    }
  }
  if (any) {
    for (std::size_t w = 0; w < last_nonempty && w + 1 < q; ++w)
      if (cert.d[w] < supplies[w + 1].u - 1)
        fail(ConstraintFamily::NoGap, phase(w), -1,
             "d = " + std::to_string(cert.d[w]) + " < u_next - 1 = " +
                 std::to_string(supplies[w + 1].u - 1));
  }
  return check;
}

std::optional<Schedule> solve_phase_dp(const Instance& inst, const DpOptions& options) {
  auto x = dp_gapless(inst, options);
  if (!x) return std::nullopt;
  return decode_counts(inst, *x);
}

}  // namespace matcon
