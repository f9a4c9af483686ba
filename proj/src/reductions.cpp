#include "matcon/reductions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace matcon {

namespace {

void check_bin_packing(const BinPackingInstance& bp) {
  if (bp.k < 1) throw Error(ErrorCode::InvalidBase, "bin count must be positive");
  if (bp.B < 1) throw Error(ErrorCode::InvalidBase, "bin size must be positive");
  for (Quantity s : bp.sizes)
    if (s < 1) throw Error(ErrorCode::InvalidBase, "object sizes must be positive");
  const Quantity sum = std::accumulate(bp.sizes.begin(), bp.sizes.end(), Quantity{0});
  if (sum != bp.k * bp.B)
    throw Error(ErrorCode::SizeSumMismatch, "sizes sum to " + std::to_string(sum) + ", expected k*B = " +
                                                std::to_string(bp.k * bp.B));
}

GeneratedInstance finish(RawInstance raw, Provenance provenance, std::string meaning) {
  GeneratedInstance g;
  g.instance = validate_instance(std::move(raw));
  g.target_makespan = g.instance.total_processing();
  g.decision_meaning = std::move(meaning);
  g.provenance = std::move(provenance);
  return g;
}

std::string object_label(std::size_t i, Quantity size) {
  return "object " + std::to_string(i) + " (size " + std::to_string(size) + ")";
}

}  // namespace

GeneratedInstance reduce_binpacking_bmax(const BinPackingInstance& bp) {
  check_bin_packing(bp);
  const Quantity B = bp.B;
  RawInstance raw;
  raw.resources = 1;
  Provenance prov;
  prov.family = "bp-bmax";
  for (std::size_t i = 0; i < bp.sizes.size(); ++i) {
    raw.jobs.push_back({2 * B * bp.sizes[i], {2 * bp.sizes[i]}});
    prov.job_labels.push_back(object_label(i, bp.sizes[i]));
  }
  raw.jobs.push_back({2 * B, {1}});
  prov.job_labels.push_back("starter");

  raw.supplies.push_back({0, {1}});
  prov.supply_labels.emplace_back(0, "starter unit");
  for (int i = 0; i < bp.k; ++i) {
    for (Quantity x = 0; x < 2 * B; ++x) {
      const Time u = 2 * B + static_cast<Time>(i) * 2 * B * B - x;
      raw.supplies.push_back({u, {1}});
      prov.supply_labels.emplace_back(u, "bin " + std::to_string(i) + ", unit " + std::to_string(x));
    }
  }
  std::sort(prov.supply_labels.begin(), prov.supply_labels.end());
  return finish(std::move(raw), std::move(prov),
                "optimal makespan = target iff the objects fill the bins exactly");
}

GeneratedInstance reduce_binpacking_q(const BinPackingInstance& bp) {
  check_bin_packing(bp);
  RawInstance raw;
  raw.resources = 1;
  Provenance prov;
  prov.family = "bp-q";
  for (std::size_t i = 0; i < bp.sizes.size(); ++i) {
    raw.jobs.push_back({bp.sizes[i], {bp.sizes[i]}});
    prov.job_labels.push_back(object_label(i, bp.sizes[i]));
  }
  for (int i = 0; i < bp.k; ++i) {
    const Time u = static_cast<Time>(i) * bp.B;
    raw.supplies.push_back({u, {bp.B}});
    prov.supply_labels.emplace_back(u, "bin " + std::to_string(i));
  }
  return finish(std::move(raw), std::move(prov),
                "optimal makespan = target iff the objects fill the bins exactly");
}

GeneratedInstance reduce_binpacking_two_resources(const BinPackingInstance& bp) {
  check_bin_packing(bp);
  const Quantity B = bp.B;
  const auto n = static_cast<Quantity>(bp.sizes.size());
  if (n > bp.k * B)
    throw Error(ErrorCode::TooManyObjects,
                std::to_string(n) + " objects exceed k*B = " + std::to_string(bp.k * B));
  for (Quantity s : bp.sizes)
    if (s > B)
      throw Error(ErrorCode::InvalidBase,
                  "object size " + std::to_string(s) + " exceeds the bin size " + std::to_string(B));
  RawInstance raw;
  raw.resources = 2;
  Provenance prov;
  prov.family = "bp-2r";
  for (std::size_t i = 0; i < bp.sizes.size(); ++i) {
    raw.jobs.push_back({1, {bp.sizes[i], B - bp.sizes[i]}});
    prov.job_labels.push_back(object_label(i, bp.sizes[i]));
  }
  for (Quantity d = 0; d < bp.k * B - n; ++d) {
    raw.jobs.push_back({1, {0, B}});
    prov.job_labels.push_back("dummy " + std::to_string(d));
  }
  for (int i = 0; i < bp.k; ++i) {
    const Time u = static_cast<Time>(i) * B;
    raw.supplies.push_back({u, {B, B * (B - 1)}});
    prov.supply_labels.emplace_back(u, "bin " + std::to_string(i));
  }
  return finish(std::move(raw), std::move(prov),
                "optimal makespan = target iff the objects fill the bins exactly");
}

GeneratedInstance reduce_independent_set(const GraphInstance& g) {
  if (g.vertices < 0) throw Error(ErrorCode::InvalidBase, "negative vertex count");
  if (g.k < 1 || g.k > g.vertices)
    throw Error(ErrorCode::InvalidBase, "k must lie in [1, n], got " + std::to_string(g.k));
  std::set<std::pair<int, int>> seen;
  for (auto [v, w] : g.edges) {
    if (v < 0 || w < 0 || v >= g.vertices || w >= g.vertices)
      throw Error(ErrorCode::InvalidBase, "edge endpoint out of range");
    if (v == w) throw Error(ErrorCode::InvalidBase, "self-loop at vertex " + std::to_string(v));
    if (!seen.insert(std::minmax(v, w)).second)
      throw Error(ErrorCode::InvalidBase, "duplicate edge");
  }
  if (g.edges.empty())
    throw Error(ErrorCode::DegenerateBase, "graph has no edges, so there are no resources");

  const auto m = g.edges.size();
  RawInstance raw;
  raw.resources = static_cast<int>(m);
  Provenance prov;
  prov.family = "indepset";
  for (int v = 0; v < g.vertices; ++v) {
    ResourceVector a(m, 0);
    for (std::size_t e = 0; e < m; ++e)
      if (g.edges[e].first == v || g.edges[e].second == v) a[e] = 1;
    raw.jobs.push_back({1, std::move(a)});
    prov.job_labels.push_back("vertex " + std::to_string(v));
  }
  raw.supplies.push_back({0, ResourceVector(m, 1)});
  raw.supplies.push_back({g.k, ResourceVector(m, 1)});
  prov.supply_labels.emplace_back(0, "first unit per edge");
  prov.supply_labels.emplace_back(g.k, "second unit per edge");
  return finish(std::move(raw), std::move(prov),
                "optimal makespan = target iff an independent set of size k exists");
}

bool bp_oracle(const BinPackingInstance& bp) {
  if (bp.sizes.size() > 12)
    throw Error(ErrorCode::CapExceeded, "bin packing oracle handles n <= 12");
  std::vector<Quantity> sizes = bp.sizes;
  std::sort(sizes.rbegin(), sizes.rend());
  std::vector<Quantity> load(static_cast<std::size_t>(std::max(bp.k, 0)), 0);

  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == sizes.size()) return true;
    std::set<Quantity> tried;
    for (auto& l : load) {
      if (l + sizes[i] > bp.B || !tried.insert(l).second) continue;
      l += sizes[i];
      if (place(i + 1)) return true;
      l -= sizes[i];
    }
    return false;
  };
  return place(0);
}

bool is_oracle(const GraphInstance& g) {
  if (g.vertices > 16) throw Error(ErrorCode::CapExceeded, "independent set oracle handles n <= 16");
  std::vector<std::uint32_t> adjacent(static_cast<std::size_t>(g.vertices), 0);
  for (auto [v, w] : g.edges) {
    adjacent[static_cast<std::size_t>(v)] |= 1U << w;
    adjacent[static_cast<std::size_t>(w)] |= 1U << v;
  }
  for (std::uint32_t set = 0; set < (1U << g.vertices); ++set) {
    if (std::popcount(set) != g.k) continue;
    bool independent = true;
    for (int v = 0; v < g.vertices && independent; ++v)
      if ((set >> v) & 1U) independent = (adjacent[static_cast<std::size_t>(v)] & set) == 0;
    if (independent) return true;
  }
  return false;
}

Instance random_instance(const RandomParams& params) {
  std::mt19937_64 rng(params.seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  std::bernoulli_distribution zero_job(params.zero_job_probability);
  const auto r = static_cast<std::size_t>(params.r);

  RawInstance raw;
  raw.resources = params.r;
  for (int j = 0; j < params.n; ++j) {
    Job job;
    job.p = uniform(1, std::max<Time>(1, params.max_p));
    job.a.assign(r, 0);
    if (!zero_job(rng)) {
      for (auto& x : job.a) x = uniform(0, params.max_a);
      if (std::all_of(job.a.begin(), job.a.end(), [](Quantity x) { return x == 0; }))
        job.a[static_cast<std::size_t>(uniform(0, params.r - 1))] =
            uniform(1, std::max<Quantity>(1, params.max_a));
    }
    raw.jobs.push_back(std::move(job));
  }
  if (params.n == 0) return validate_instance(std::move(raw));

  Time u = params.first_supply;
  for (int l = 0; l < std::max(1, params.q); ++l) {
    if (l > 0) u += uniform(1, std::max<Time>(1, params.max_gap));
    Supply s{u, ResourceVector(r, 0)};
    for (auto& x : s.b) x = uniform(0, params.max_a);
    raw.supplies.push_back(std::move(s));
  }
  auto& first = raw.supplies.front().b;
  if (std::all_of(first.begin(), first.end(), [](Quantity x) { return x == 0; }))
    first[static_cast<std::size_t>(uniform(0, params.r - 1))] = 1;

  const auto last = static_cast<std::int64_t>(raw.supplies.size()) - 1;
  for (std::size_t i = 0; i < r; ++i) {
    Quantity demand = 0, supply = 0;
    for (const auto& job : raw.jobs) demand += job.a[i];
    for (const auto& s : raw.supplies) supply += s.b[i];
    for (; supply < demand; ++supply)
      ++raw.supplies[static_cast<std::size_t>(uniform(0, last))].b[i];
  }
  return validate_instance(std::move(raw));
}

}  // namespace matcon
