#pragma once
// Detector: classifies aggregations against the probe operation graph.
//
// An aggregation is a true solution iff its bond graph is isomorphic to one of
// the acceptance targets. The count comparison of the detector rules is kept
// as a fast prefilter; graph isomorphism is the authority (count equality does
// not imply isomorphism: a 4-path plus a chord matches a 4-cycle's counts).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pm/aggregation.hpp"

namespace pm {

struct TargetGraph {
  std::string name;
  int order = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based slot indices
  // When body-labeled, slot i may only host the data type with body
  // `slot_bodies[i]` (used for coloring, where the target is G itself).
  std::vector<int> slot_bodies;

  bool body_labeled() const { return !slot_bodies.empty(); }
  static TargetGraph cycle(int order);
};

struct ProbeOperationGraph {
  std::vector<TargetGraph> targets;

  int threshold() const;  // max |V(target)|, the platform order cap
  bool empty() const { return targets.empty(); }
};

struct SolutionStore {
  std::vector<CanonicalAggregation> accepted;  // Q
  std::vector<CanonicalAggregation> residues;  // C
};

// Count prefilter: fails iff no target matches both |M| and the bond count.
bool prefilter(const CanonicalAggregation& m, const ProbeOperationGraph& target);

// Isomorphism test against any target (VF2-style backtracking with degree
// pruning; body-labeled targets match each instance to the slot carrying the
// same body).
bool is_true_solution(const CanonicalAggregation& m, const ProbeOperationGraph& target);

// Partition of theta: every aggregation lands in exactly one store.
SolutionStore separate(const std::vector<CanonicalAggregation>& theta,
                       const ProbeOperationGraph& target);

// Residue recycling: data instances go back to their pools, probe copies in
// residue bonds are consumed. Returns the per-body refund counts.
std::map<int, long long> recycle(const SolutionStore& store, DataLibrary& data);

// Plain unlabeled graph isomorphism on adjacency lists (exposed for tests).
bool graphs_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1, int n2,
                       const std::vector<std::pair<int, int>>& e2);

}  // namespace pm
