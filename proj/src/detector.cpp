#include "pm/detector.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pm {

TargetGraph TargetGraph::cycle(int order) {
  TargetGraph t;
  t.name = "C" + std::to_string(order);
  t.order = order;
  for (int i = 0; i < order; ++i) t.edges.push_back({i, (i + 1) % order});
  return t;
}

int ProbeOperationGraph::threshold() const {
  int m = 1;
  for (const auto& t : targets) m = std::max(m, t.order);
  return m;
}

bool prefilter(const CanonicalAggregation& m, const ProbeOperationGraph& target) {
  for (const auto& t : target.targets) {
    if (m.order() == t.order && m.bond_count() == static_cast<int>(t.edges.size()))
      return true;
  }
  return false;
}

namespace {

struct AdjacencyMatrix {
  int n = 0;
  std::vector<char> cells;
  bool at(int i, int j) const { return cells[i * n + j] != 0; }
  void set(int i, int j) { cells[i * n + j] = cells[j * n + i] = 1; }
};

AdjacencyMatrix to_matrix(int n, const std::vector<std::pair<int, int>>& edges) {
  AdjacencyMatrix m;
  m.n = n;
  m.cells.assign(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : edges) m.set(u, v);
  return m;
}

// Backtracking isomorphism with degree pruning and connectivity-first vertex
// order; induced-subgraph consistency is checked against mapped neighbors and
// non-neighbors, so with equal edge counts a full mapping is an isomorphism.
bool isomorphic(const AdjacencyMatrix& g1, const std::vector<int>& deg1,
                const AdjacencyMatrix& g2, const std::vector<int>& deg2) {
  const int n = g1.n;
  std::vector<int> order;
  {
    // highest degree first, then grow along the mapped prefix
    std::vector<char> placed(n, 0);
    for (int k = 0; k < n; ++k) {
      int best = -1;
      bool best_touches = false;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        bool touches = false;
        for (int u = 0; u < n && !touches; ++u)
          if (placed[u] && g1.at(v, u)) touches = true;
        if (best == -1 || (touches && !best_touches) ||
            (touches == best_touches && deg1[v] > deg1[best])) {
          best = v;
          best_touches = touches;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
  }
  std::vector<int> map1to2(n, -1), used2(n, 0);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used2[w] || deg1[v] != deg2[w]) continue;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (map1to2[u] == -1) continue;
        if (g1.at(v, u) != g2.at(map1to2[u], w)) ok = false;
      }
      if (!ok) continue;
      map1to2[v] = w;
      used2[w] = 1;
      if (extend(depth + 1)) return true;
      map1to2[v] = -1;
      used2[w] = 0;
    }
    return false;
  };
  return extend(0);
}

std::vector<int> degrees(const AdjacencyMatrix& m) {
  std::vector<int> deg(m.n, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j)) ++deg[i];
  return deg;
}

// Aggregation bond graph over bodies (bodies are unique per aggregation).
void aggregation_graph(const CanonicalAggregation& m, int& n,
                       std::vector<std::pair<int, int>>& edges) {
  n = m.order();
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[m.bodies[i]] = i;
  edges.clear();
  for (const auto& b : m.bonds) edges.push_back({index.at(b.body_a), index.at(b.body_b)});
}

bool matches_labeled(const CanonicalAggregation& m, const TargetGraph& t) {
  if (m.order() != t.order || m.bond_count() != static_cast<int>(t.edges.size())) return false;
  std::vector<int> want = t.slot_bodies;
  std::sort(want.begin(), want.end());
  if (m.bodies != want) return false;
  std::set<std::pair<int, int>> bonds;
  for (const auto& b : m.bonds)
    bonds.insert({std::min(b.body_a, b.body_b), std::max(b.body_a, b.body_b)});
  if (static_cast<int>(bonds.size()) != m.bond_count()) return false;
  for (auto [i, j] : t.edges) {
    int u = t.slot_bodies[i], v = t.slot_bodies[j];
    if (!bonds.count({std::min(u, v), std::max(u, v)})) return false;
  }
  return true;
}

}  // namespace

bool graphs_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1, int n2,
                       const std::vector<std::pair<int, int>>& e2) {
  if (n1 != n2 || e1.size() != e2.size()) return false;
  auto m1 = to_matrix(n1, e1), m2 = to_matrix(n2, e2);
  auto d1 = degrees(m1), d2 = degrees(m2);
  auto s1 = d1, s2 = d2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return false;
  return isomorphic(m1, d1, m2, d2);
}

bool is_true_solution(const CanonicalAggregation& m, const ProbeOperationGraph& target) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const auto& t : target.targets) {
    if (t.body_labeled()) {
      if (matches_labeled(m, t)) return true;
      continue;
    }
    if (m.order() != t.order || m.bond_count() != static_cast<int>(t.edges.size())) continue;
    if (edges.empty() && n == 0) aggregation_graph(m, n, edges);
    if (graphs_isomorphic(n, edges, t.order, t.edges)) return true;
  }
  return false;
}

SolutionStore separate(const std::vector<CanonicalAggregation>& theta,
                       const ProbeOperationGraph& target) {
  SolutionStore store;
  for (const auto& m : theta) {
    if (prefilter(m, target) && is_true_solution(m, target))
      store.accepted.push_back(m);
    else
      store.residues.push_back(m);
  }
  return store;
}

std::map<int, long long> recycle(const SolutionStore& store, DataLibrary& data) {
  std::map<int, long long> refund;
  for (const auto& m : store.residues) {
    for (int body : m.bodies) {
      ++refund[body];
      auto it = data.inventory.find(body);
      if (it != data.inventory.end() && it->second != kUnbounded) ++it->second;
    }
  }
  return refund;
}

}  // namespace pm
