#include "pm/aggregation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pm {

bool Aggregation::has_bond_between(int inst_x, int inst_y) const {
  for (const auto& b : bonds) {
    if ((b.inst_a == inst_x && b.inst_b == inst_y) ||
        (b.inst_a == inst_y && b.inst_b == inst_x))
      return true;
  }
  return false;
}

bool Aggregation::contains(int instance) const {
  return std::binary_search(instances.begin(), instances.end(), instance);
}

CanonicalBond make_canonical_bond(int body_a, std::string tag_a, int body_b,
                                  std::string tag_b, ProbeKind kind) {
  CanonicalBond bond{body_a, std::move(tag_a), body_b, std::move(tag_b), kind};
  if (kind == ProbeKind::kConnective &&
      std::tie(bond.body_b, bond.tag_b) < std::tie(bond.body_a, bond.tag_a)) {
    std::swap(bond.body_a, bond.body_b);
    std::swap(bond.tag_a, bond.tag_b);
  }
  return bond;
}

CanonicalAggregation canonicalize(const Aggregation& agg,
                                  const std::vector<int>& instance_bodies) {
  CanonicalAggregation out;
  out.bodies.reserve(agg.instances.size());
  for (int inst : agg.instances) {
    if (inst < 0 || inst >= static_cast<int>(instance_bodies.size()))
      throw std::out_of_range("canonicalize: unknown instance id");
    out.bodies.push_back(instance_bodies[inst]);
  }
  std::sort(out.bodies.begin(), out.bodies.end());
  out.bonds.reserve(agg.bonds.size());
  for (const auto& b : agg.bonds) {
    out.bonds.push_back(make_canonical_bond(instance_bodies[b.inst_a], b.tag_a,
                                            instance_bodies[b.inst_b], b.tag_b,
                                            b.probe.kind));
  }
  std::sort(out.bonds.begin(), out.bonds.end());
  return out;
}

std::string to_string(const CanonicalAggregation& agg) {
  std::ostringstream out;
  out << "{order " << agg.order() << ": ";
  for (size_t i = 0; i < agg.bodies.size(); ++i) {
    if (i) out << ",";
    out << agg.bodies[i];
  }
  out << " |";
  for (const auto& b : agg.bonds) {
    out << " (" << b.body_a << "^" << b.tag_a << (b.kind == ProbeKind::kConnective ? "--" : "->")
        << b.body_b << "^" << b.tag_b << ")";
  }
  out << "}";
  return out.str();
}

}  // namespace pm
