#pragma once
// Aggregations: connected assemblies of data instances joined by applied probes.

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "pm/library.hpp"

namespace pm {

// One applied probe inside an aggregation. Endpoint order follows the probe:
// (inst_a, tag_a) hosts probe.a and (inst_b, tag_b) hosts probe.b.
struct Bond {
  int inst_a = 0;
  std::string tag_a;
  int inst_b = 0;
  std::string tag_b;
  ProbeType probe;
};

struct Aggregation {
  std::vector<int> instances;  // platform instance ids, sorted
  std::vector<Bond> bonds;

  int order() const { return static_cast<int>(instances.size()); }
  int bond_count() const { return static_cast<int>(bonds.size()); }
  bool has_bond_between(int inst_x, int inst_y) const;
  bool contains(int instance) const;
};

// Type-level bond: (body_a, tag_a, body_b, tag_b), connective bonds normalized
// so the smaller (body, tag) endpoint comes first.
struct CanonicalBond {
  int body_a = 0;
  std::string tag_a;
  int body_b = 0;
  std::string tag_b;
  ProbeKind kind = ProbeKind::kConnective;

  auto operator<=>(const CanonicalBond&) const = default;
};

// The canonical form used for deduplication and set comparison everywhere:
// sorted member bodies plus the sorted list of canonical bond tuples.
struct CanonicalAggregation {
  std::vector<int> bodies;
  std::vector<CanonicalBond> bonds;

  int order() const { return static_cast<int>(bodies.size()); }
  int bond_count() const { return static_cast<int>(bonds.size()); }

  auto operator<=>(const CanonicalAggregation&) const = default;
};

CanonicalBond make_canonical_bond(int body_a, std::string tag_a, int body_b,
                                  std::string tag_b, ProbeKind kind);

CanonicalAggregation canonicalize(const Aggregation& agg,
                                  const std::vector<int>& instance_bodies);

std::string to_string(const CanonicalAggregation& agg);

}  // namespace pm
