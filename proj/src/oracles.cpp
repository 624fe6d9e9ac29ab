#include "pm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

namespace pm {

CanonicalCycle canonical_cycle(const std::vector<int>& cycle) {
  if (cycle.empty()) return {};
  auto it = std::min_element(cycle.begin(), cycle.end());
  CanonicalCycle out;
  out.reserve(cycle.size());
  const size_t n = cycle.size();
  const size_t start = static_cast<size_t>(it - cycle.begin());
  for (size_t i = 0; i < n; ++i) out.push_back(cycle[(start + i) % n]);
  if (n > 2 && out[1] > out[n - 1]) {
    std::reverse(out.begin() + 1, out.end());
  }
  return out;
}

std::set<CanonicalCycle> brute_hamilton(const InputGraph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n)
    throw SizeLimitExceeded("brute_hamilton: " + std::to_string(n) + " vertices > limit " +
                            std::to_string(max_n));
  std::set<CanonicalCycle> cycles;
  if (n < 3) return cycles;
  std::vector<int> path{1};
  std::vector<bool> used(n + 1, false);
  used[1] = true;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(path.back(), 1)) cycles.insert(canonical_cycle(path));
      return;
    }
    for (int next : g.neighbors(path.back())) {
      if (used[next]) continue;
      used[next] = true;
      path.push_back(next);
      rec();
      path.pop_back();
      used[next] = false;
    }
  };
  rec();
  return cycles;
}

std::set<std::vector<int>> brute_coloring(const InputGraph& g, int k,
                                          const std::map<int, int>& fixed) {
  const int n = g.vertex_count();
  long long free_vertices = n - static_cast<long long>(fixed.size());
  double states = std::pow(static_cast<double>(k), static_cast<double>(free_vertices));
  if (states > 1e8)
    throw SizeLimitExceeded("brute_coloring: k^free = " + std::to_string(states) + " > 1e8");
  std::set<std::vector<int>> out;
  std::vector<int> color(n + 1, -1);
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.insert(std::vector<int>(color.begin() + 1, color.end()));
      return;
    }
    auto fx = fixed.find(v);
    for (int c = 0; c < k; ++c) {
      if (fx != fixed.end() && fx->second != c) continue;
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && color[u] == c) { ok = false; break; }
      if (ok) {
        color[v] = c;
        rec(v + 1);
        color[v] = -1;
      }
    }
  };
  rec(1);
  return out;
}

namespace {

// Fiber availability on a type-level aggregation, mirroring the platform rules
// but recomputed from scratch (this file stays independent of the engine).
bool fiber_free(const CanonicalAggregation& agg, const DataType& type, const std::string& tag) {
  int uses_of_tag = 0;
  std::set<std::string> tags_used;
  for (const auto& b : agg.bonds) {
    if (b.body_a == type.body) {
      tags_used.insert(b.tag_a);
      if (b.tag_a == tag) ++uses_of_tag;
    }
    if (b.body_b == type.body) {
      tags_used.insert(b.tag_b);
      if (b.tag_b == tag) ++uses_of_tag;
    }
  }
  if (type.fiber_use == FiberUse::kPorts) return uses_of_tag == 0;
  return tags_used.empty() || (tags_used.size() == 1 && *tags_used.begin() == tag);
}

bool pair_bonded(const CanonicalAggregation& agg, int body_x, int body_y) {
  for (const auto& b : agg.bonds) {
    if ((b.body_a == body_x && b.body_b == body_y) ||
        (b.body_a == body_y && b.body_b == body_x))
      return true;
  }
  return false;
}

bool has_body(const CanonicalAggregation& agg, int body) {
  return std::binary_search(agg.bodies.begin(), agg.bodies.end(), body);
}

CanonicalAggregation with_bond(const CanonicalAggregation& agg, const ProbeType& probe,
                               bool add_a, bool add_b) {
  CanonicalAggregation out = agg;
  if (add_a) out.bodies.push_back(probe.a.body);
  if (add_b) out.bodies.push_back(probe.b.body);
  std::sort(out.bodies.begin(), out.bodies.end());
  out.bonds.push_back(
      make_canonical_bond(probe.a.body, probe.a.tag, probe.b.body, probe.b.tag, probe.kind));
  std::sort(out.bonds.begin(), out.bonds.end());
  return out;
}

}  // namespace

std::set<CanonicalAggregation> brute_aggregations(const DataLibrary& data,
                                                  const ProbeLibrary& probes,
                                                  int max_order) {
  if (data.type_count() > 6)
    throw SizeLimitExceeded("brute_aggregations: > 6 data types");
  if (probes.type_count() > 8)
    throw SizeLimitExceeded("brute_aggregations: > 8 probe types");

  std::set<CanonicalAggregation> all;
  std::deque<CanonicalAggregation> frontier;
  for (const auto& type : data.types) {
    CanonicalAggregation unit;
    unit.bodies = {type.body};
    if (all.insert(unit).second) frontier.push_back(unit);
  }

  while (!frontier.empty()) {
    CanonicalAggregation agg = frontier.front();
    frontier.pop_front();
    for (const auto& probe : probes.probes) {
      const DataType* ta = data.find(probe.a.body);
      const DataType* tb = data.find(probe.b.body);
      if (ta == nullptr || tb == nullptr || !ta->has_fiber(probe.a.tag) ||
          !tb->has_fiber(probe.b.tag))
        continue;
      const bool in_a = has_body(agg, probe.a.body);
      const bool in_b = has_body(agg, probe.b.body);
      CanonicalAggregation next;
      if (in_a && in_b) {
        // internal bond
        if (pair_bonded(agg, probe.a.body, probe.b.body)) continue;
        if (!fiber_free(agg, *ta, probe.a.tag) || !fiber_free(agg, *tb, probe.b.tag)) continue;
        next = with_bond(agg, probe, false, false);
      } else if (in_a && !in_b) {
        if (agg.order() + 1 > max_order) continue;
        if (!fiber_free(agg, *ta, probe.a.tag)) continue;
        next = with_bond(agg, probe, false, true);
      } else if (!in_a && in_b) {
        if (agg.order() + 1 > max_order) continue;
        if (!fiber_free(agg, *tb, probe.b.tag)) continue;
        next = with_bond(agg, probe, true, false);
      } else {
        continue;
      }
      if (all.insert(next).second) frontier.push_back(next);
    }
  }
  return all;
}

}  // namespace pm
