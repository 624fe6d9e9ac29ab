#pragma once
// Brute-force ground truth, independent of the platform engine: Hamilton
// cycles, proper colorings, and small-instance aggregation spaces.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pm/aggregation.hpp"
#include "pm/graph.hpp"
#include "pm/library.hpp"

namespace pm {

struct SizeLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rotation/reflection invariant cycle: smallest vertex first, smaller neighbor
// second.
using CanonicalCycle = std::vector<int>;

CanonicalCycle canonical_cycle(const std::vector<int>& cycle);

// Exhaustive backtracking enumeration; guarded at n <= max_n.
std::set<CanonicalCycle> brute_hamilton(const InputGraph& g, int max_n = 14);

// All proper k-colorings (as color index per vertex, 1-based vertices)
// extending `fixed`; guarded by k^(free vertices) <= 1e8.
std::set<std::vector<int>> brute_coloring(const InputGraph& g, int k,
                                          const std::map<int, int>& fixed = {});

// Every aggregation satisfying the platform rules (order cap, per-type and
// per-pair uniqueness, fiber modes) over the given libraries, by exhaustive
// bond search. Guarded: <= 6 data types, <= 8 probe types.
std::set<CanonicalAggregation> brute_aggregations(const DataLibrary& data,
                                                  const ProbeLibrary& probes,
                                                  int max_order);

}  // namespace pm
