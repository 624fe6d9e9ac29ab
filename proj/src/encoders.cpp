#include "pm/encoders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "pm/oracles.hpp"

namespace pm {

namespace {

// minimum cover size honoring forced vertex decisions (state: 0 undecided,
// 1 in, -1 out); branch-and-bound on the first uncovered edge
int cover_size(const InputGraph& g, std::vector<int>& state, int taken, int best) {
  if (taken >= best) return best;
  int pu = 0, pv = 0;
  for (auto [u, v] : g.edges()) {
    if (state[u] != 1 && state[v] != 1) {
      pu = u;
      pv = v;
      break;
    }
  }
  if (pu == 0) return taken;  // everything covered
  if (state[pu] == -1 && state[pv] == -1) return best;  // infeasible branch
  if (state[pu] == 0) {
    state[pu] = 1;
    best = cover_size(g, state, taken + 1, best);
    if (state[pv] != -1) {
      state[pu] = -1;  // pu out forces pv in for this edge
      state[pv] = 1;
      best = cover_size(g, state, taken + 1, best);
      state[pv] = 0;
    }
    state[pu] = 0;
  } else {  // pu forced out, pv must cover
    state[pv] = 1;
    best = cover_size(g, state, taken + 1, best);
    state[pv] = 0;
  }
  return best;
}

}  // namespace

CoverResult min_vertex_cover(const InputGraph& g, int exact_limit) {
  const int n = g.vertex_count();
  CoverResult result;
  if (g.edge_count() == 0) return result;
  if (n > exact_limit) {
    // greedy 2-approximation: take both endpoints of an uncovered edge
    std::vector<bool> in(n + 1, false);
    for (auto [u, v] : g.edges()) {
      if (!in[u] && !in[v]) in[u] = in[v] = true;
    }
    for (int v = 1; v <= n; ++v)
      if (in[v]) result.cover.push_back(v);
    result.exact = false;
    return result;
  }
  std::vector<int> state(n + 1, 0);
  const int optimum = cover_size(g, state, 0, n + 1);
  // lexicographically smallest optimum: decide vertices in ascending order
  int chosen = 0;
  for (int v = 1; v <= n && chosen < optimum; ++v) {
    state[v] = 1;
    const int with_v = cover_size(g, state, chosen + 1, optimum + 1);
    if (with_v == optimum) {
      result.cover.push_back(v);
      ++chosen;
    } else {
      state[v] = -1;
    }
  }
  result.exact = true;
  return result;
}

// ---- Hamilton ----

namespace {

std::string datum_name(const TwoPathDatum& d) {
  if (d.center < 10 && d.l < 10 && d.j < 10) {
    return "x" + std::to_string(d.center) + std::to_string(d.l) + std::to_string(d.j);
  }
  return "x" + std::to_string(d.center) + "_" + std::to_string(d.l) + "_" +
         std::to_string(d.j);
}

}  // namespace

HamiltonInstance encode_hamilton(const InputGraph& g,
                                 const std::optional<std::vector<int>>& cover_opt) {
  if (g.vertex_count() < 5)
    throw EncodeError("GraphTooSmall: the encoding requires at least 5 vertices, got " +
                      std::to_string(g.vertex_count()));
  HamiltonInstance inst;
  inst.graph = g;
  if (cover_opt) {
    inst.cover = *cover_opt;
    std::sort(inst.cover.begin(), inst.cover.end());
    std::set<int> in(inst.cover.begin(), inst.cover.end());
    for (auto [u, v] : g.edges())
      if (!in.count(u) && !in.count(v))
        throw EncodeError("CoverInvalid: edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " has no endpoint in the given cover");
  } else {
    inst.cover = min_vertex_cover(g).cover;
  }

  // data: all 2-paths v_l v_c v_j centered in the cover, canonicalized l < j
  int next_body = 0;
  for (int c : inst.cover) {
    if (g.degree(c) < 2)
      throw EncodeError("NoTwoPaths: cover vertex " + std::to_string(c) +
                        " has degree < 2, no Hamilton cycle exists");
    const auto& nb = g.neighbors(c);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        TwoPathDatum d{c, nb[i], nb[j]};
        DataType type;
        type.body = ++next_body;
        type.group = c;
        type.name = datum_name(d);
        type.fibers = {{type.body, std::to_string(d.l)}, {type.body, std::to_string(d.j)}};
        type.fiber_use = FiberUse::kPorts;
        inst.data.types.push_back(std::move(type));
        inst.data.inventory[next_body] = kUnbounded;
        inst.datum_of[next_body] = d;
      }
    }
  }

  // probes between data with distinct centers, by the two construction rules
  inst.probes.kind = ProbeKind::kConnective;
  for (size_t x = 0; x < inst.data.types.size(); ++x) {
    for (size_t y = x + 1; y < inst.data.types.size(); ++y) {
      const DataType& dx = inst.data.types[x];
      const DataType& dy = inst.data.types[y];
      const TwoPathDatum& a = inst.datum_of.at(dx.body);
      const TwoPathDatum& b = inst.datum_of.at(dy.body);
      if (a.center == b.center) continue;
      std::set<int> ea{a.l, a.j}, eb{b.l, b.j};
      std::vector<int> shared;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(shared));
      std::set<int> ta{a.center, a.l, a.j}, tb{b.center, b.l, b.j};
      std::vector<int> tri;
      std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                            std::back_inserter(tri));
      const bool count_rule = tri.size() == 1 && shared.size() == 1;
      if (!g.has_edge(a.center, b.center)) {
        if (count_rule) {
          const std::string s = std::to_string(shared.front());
          inst.probes.add(make_connective({dx.body, s}, {dy.body, s}), kUnbounded);
        }
      } else if (count_rule) {
        const std::string s = std::to_string(shared.front());
        inst.probes.add(make_connective({dx.body, s}, {dy.body, s}), kUnbounded);
      } else if (ea.count(b.center) && eb.count(a.center) && shared.empty()) {
        inst.probes.add(make_connective({dx.body, std::to_string(b.center)},
                                        {dy.body, std::to_string(a.center)}),
                        kUnbounded);
      }
    }
  }

  // acceptance targets: a Hamilton cycle tiled by cover-centered 2-paths uses
  // between ceil(n/2) and |cover| data
  const int lo = (g.vertex_count() + 1) / 2;
  const int hi = static_cast<int>(inst.cover.size());
  for (int m = lo; m <= hi; ++m)
    if (m >= 3) inst.target.targets.push_back(TargetGraph::cycle(m));
  return inst;
}

std::string to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::kOk: return "Ok";
    case DecodeStatus::kNotACycle: return "NotACycle";
    case DecodeStatus::kNotSpanning: return "NotSpanning";
    case DecodeStatus::kEdgeNotInGraph: return "EdgeNotInGraph";
    case DecodeStatus::kImproperColoring: return "ImproperColoring";
  }
  return "?";
}

DecodedCycle decode_hamilton(const CanonicalAggregation& m, const HamiltonInstance& instance) {
  DecodedCycle out;
  std::set<std::pair<int, int>> edges;
  for (int body : m.bodies) {
    auto it = instance.datum_of.find(body);
    if (it == instance.datum_of.end()) {
      out.status = DecodeStatus::kEdgeNotInGraph;
      return out;
    }
    const TwoPathDatum& d = it->second;
    edges.insert(std::minmax(d.center, d.l));
    edges.insert(std::minmax(d.center, d.j));
  }
  const int n = instance.graph.vertex_count();
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : edges) {
    if (!instance.graph.has_edge(u, v)) {
      out.status = DecodeStatus::kEdgeNotInGraph;
      return out;
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (static_cast<int>(adj.size()) != n) {
    out.status = DecodeStatus::kNotSpanning;
    return out;
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) {
      out.status = DecodeStatus::kNotACycle;
      return out;
    }
  }
  // walk the cycle; degree 2 everywhere, so failure means several components
  std::vector<int> cycle{adj.begin()->first};
  int prev = -1;
  while (true) {
    const auto& nb = adj[cycle.back()];
    const int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cycle.back();
    if (next == cycle.front()) break;
    cycle.push_back(next);
  }
  if (static_cast<int>(cycle.size()) != n) {
    out.status = DecodeStatus::kNotACycle;
    return out;
  }
  out.cycle = canonical_cycle(cycle);
  return out;
}

// ---- coloring ----

std::vector<std::string> default_palette(int k) {
  static const std::vector<std::string> kBase{"r", "y", "b", "g"};
  std::vector<std::string> out;
  for (int i = 0; i < k; ++i) {
    if (i < static_cast<int>(kBase.size()))
      out.push_back(kBase[i]);
    else
      out.push_back("c" + std::to_string(i));
  }
  return out;
}

FixedClasses fixed_classes(const InputGraph& g, int k, int vertex_limit) {
  const int n = g.vertex_count();
  if (n > vertex_limit)
    throw SizeLimitExceeded("fixed_classes: " + std::to_string(n) + " vertices > limit " +
                            std::to_string(vertex_limit));
  const auto colorings = brute_coloring(g, k);
  if (colorings.empty()) throw EncodeError("Uncolorable: no " + std::to_string(k) + "-coloring");

  // partitions up to color permutation, as first-occurrence normal form
  std::set<std::vector<int>> partitions;
  for (const auto& col : colorings) {
    std::vector<int> norm(col.size(), -1);
    std::map<int, int> relabel;
    for (size_t i = 0; i < col.size(); ++i) {
      norm[i] = relabel.try_emplace(col[i], static_cast<int>(relabel.size())).first->second;
    }
    partitions.insert(std::move(norm));
  }

  // pairwise same-class invariance across all partitions
  std::vector<std::vector<int>> same(n + 1, std::vector<int>(n + 1, -1));  // -1 unknown, 2 varies
  for (const auto& part : partitions) {
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        const int rel = part[u - 1] == part[v - 1] ? 1 : 0;
        int& cell = same[u][v];
        if (cell == -1)
          cell = rel;
        else if (cell != rel)
          cell = 2;
      }
    }
  }
  auto invariant = [&](int u, int v) { return same[std::min(u, v)][std::max(u, v)] != 2; };
  auto together = [&](int u, int v) { return same[std::min(u, v)][std::max(u, v)] == 1; };

  // classes spanned by an invariant set
  auto class_count = [&](const std::vector<int>& s) {
    std::vector<int> reps;
    for (int v : s) {
      bool found = false;
      for (int r : reps)
        if (together(r, v)) { found = true; break; }
      if (!found) reps.push_back(v);
    }
    return static_cast<int>(reps.size());
  };

  // maximum set with pairwise-invariant relations spanning exactly k classes;
  // branch and bound over vertices in ascending order (lex-smallest optimum)
  std::vector<int> current, best;
  std::function<void(int)> grow = [&](int v) {
    if (static_cast<int>(current.size()) + (n - v + 1) <= static_cast<int>(best.size())) return;
    if (v > n) {
      if (class_count(current) == k && current.size() > best.size()) best = current;
      return;
    }
    bool compatible = true;
    for (int u : current)
      if (!invariant(u, v)) { compatible = false; break; }
    if (compatible) {
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
    grow(v + 1);
  };
  grow(1);

  FixedClasses out;
  out.coloring_orbits = static_cast<long long>(partitions.size());
  if (best.empty()) return out;
  out.vertices = best;
  // canonical colors: classes ordered by smallest member
  const auto palette = default_palette(k);
  std::vector<int> reps;
  for (int v : best) {
    bool found = false;
    for (size_t r = 0; r < reps.size(); ++r) {
      if (together(reps[r], v)) {
        out.color[v] = palette[r];
        found = true;
        break;
      }
    }
    if (!found) {
      out.color[v] = palette[reps.size()];
      reps.push_back(v);
    }
  }
  return out;
}

ColorCandidateTable candidates_from_fixed(const InputGraph& g, int k, const FixedClasses& fixed) {
  ColorCandidateTable table;
  table.k = k;
  table.palette = default_palette(k);
  std::set<int> fixed_set(fixed.vertices.begin(), fixed.vertices.end());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (fixed_set.count(v)) {
      table.candidates[v] = {fixed.color.at(v)};
      continue;
    }
    std::set<std::string> banned;
    for (int u : g.neighbors(v))
      if (fixed_set.count(u)) banned.insert(fixed.color.at(u));
    std::vector<std::string> allowed;
    for (const auto& c : table.palette)
      if (!banned.count(c)) allowed.push_back(c);
    table.candidates[v] = std::move(allowed);
  }
  return table;
}

ColorCandidateTable full_candidates(const InputGraph& g, int k) {
  ColorCandidateTable table;
  table.k = k;
  table.palette = default_palette(k);
  for (int v = 1; v <= g.vertex_count(); ++v) table.candidates[v] = table.palette;
  return table;
}

ColoringInstance encode_coloring(const InputGraph& g, int k, const ColorCandidateTable& table) {
  if (g.vertex_count() == 0) throw EncodeError("EmptyGraph");
  if (!g.connected())
    throw EncodeError("Disconnected: a single aggregation cannot match a disconnected target");
  ColoringInstance inst;
  inst.graph = g;
  inst.table = table;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    auto it = table.candidates.find(v);
    if (it == table.candidates.end() || it->second.empty())
      throw EncodeError("EmptyCandidateSet: vertex " + std::to_string(v));
    DataType type;
    type.body = v;
    type.group = v;
    type.name = "x" + std::to_string(v);
    for (const auto& c : it->second) type.fibers.push_back({v, c});
    type.fiber_use = FiberUse::kExclusive;
    inst.data.types.push_back(std::move(type));
    inst.data.inventory[v] = kUnbounded;
  }
  inst.probes.kind = ProbeKind::kConnective;
  for (auto [u, v] : g.edges()) {
    for (const auto& cu : table.candidates.at(u)) {
      for (const auto& cv : table.candidates.at(v)) {
        if (cu == cv) continue;
        inst.probes.add(make_connective({u, cu}, {v, cv}), kUnbounded);
      }
    }
  }
  TargetGraph t;
  t.name = "G";
  t.order = g.vertex_count();
  for (auto [u, v] : g.edges()) t.edges.push_back({u - 1, v - 1});
  t.slot_bodies.resize(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) t.slot_bodies[v - 1] = v;
  inst.target.targets.push_back(std::move(t));
  return inst;
}

DecodedColoring decode_coloring(const CanonicalAggregation& m, const ColoringInstance& instance) {
  DecodedColoring out;
  const int n = instance.graph.vertex_count();
  std::map<int, std::set<std::string>> tags;
  for (const auto& b : m.bonds) {
    tags[b.body_a].insert(b.tag_a);
    tags[b.body_b].insert(b.tag_b);
  }
  for (int v = 1; v <= n; ++v) {
    auto it = tags.find(v);
    if (it == tags.end() || it->second.size() != 1) {
      out.status = DecodeStatus::kImproperColoring;
      return out;
    }
    out.color[v] = *it->second.begin();
  }
  for (auto [u, v] : instance.graph.edges()) {
    if (out.color.at(u) == out.color.at(v)) {
      out.status = DecodeStatus::kImproperColoring;
      out.color.clear();
      return out;
    }
  }
  return out;
}

}  // namespace pm
