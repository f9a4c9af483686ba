#pragma once

// Instance generators built from the classical hardness constructions, each
// paired with a brute-force solver for its base problem so that generated
// instances come with ground truth. In every construction the base instance
// is a YES instance iff the generated instance has a schedule that runs
// back-to-back from time 0, i.e. iff its optimal makespan equals the total
// processing time.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matcon/core.hpp"

namespace matcon {

struct BinPackingInstance {
  int k = 1;        // bins
  Quantity B = 1;   // bin size
  std::vector<Quantity> sizes;
};

struct GraphInstance {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  /// Target independent-set size.
  int k = 1;
};

struct Provenance {
  std::string family;
  /// One label per job, index aligned with the instance.
  std::vector<std::string> job_labels;
  /// (supply date, label) pairs.
  std::vector<std::pair<Time, std::string>> supply_labels;
};

struct GeneratedInstance {
  Instance instance;
  Time target_makespan = 0;
  std::string decision_meaning;
  Provenance provenance;
};

/// Single resource, at most one unit per supply date. Object i becomes a job
/// (2B s_i; 2 s_i); a starter job (2B; 1) matches a unit supplied at time 0.
/// Bin i in {0..k-1} is announced by unit supplies at (2B + i 2B^2) - x for
/// x in {0..2B-1}.
GeneratedInstance reduce_binpacking_bmax(const BinPackingInstance& bp);

/// Single resource, p = a = s_i, and k supplies of B units at 0, B, ..., (k-1)B.
GeneratedInstance reduce_binpacking_q(const BinPackingInstance& bp);

/// Two resources, unit processing times. Object jobs (1; s_i, B - s_i),
/// kB - n dummy jobs (1; 0, B) and k supplies (B, B(B-1)) at 0, B, ...
GeneratedInstance reduce_binpacking_two_resources(const BinPackingInstance& bp);

/// One resource per edge, one unit job per vertex requiring its incident
/// edges, one unit of every resource at times 0 and k.
GeneratedInstance reduce_independent_set(const GraphInstance& g);

/// True iff the objects fit into k bins of size B. Requires n <= 12.
bool bp_oracle(const BinPackingInstance& bp);

/// True iff the graph has an independent set of size k. Requires n <= 16.
bool is_oracle(const GraphInstance& g);

struct RandomParams {
  int n = 5;
  int r = 1;
  Time max_p = 3;
  Quantity max_a = 3;
  int q = 3;
  Time max_gap = 3;
  std::uint64_t seed = 1;
  /// Probability that a job gets no requirement at all.
  double zero_job_probability = 0.0;
  /// Date of the first supply.
  Time first_supply = 0;
};

/// Deterministic in `seed`. Total supply covers total demand per resource.
/// With the defaults the instance is already normalized.
Instance random_instance(const RandomParams& params);

}  // namespace matcon
