#include "pm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pm {

InputGraph::InputGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw GraphParseError("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n)
      throw GraphParseError("edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
    if (u == v) throw GraphParseError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    seen.insert({u, v});
  }
  edges_.assign(seen.begin(), seen.end());
  adjacency_.assign(n_ + 1, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool InputGraph::has_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& InputGraph::neighbors(int v) const {
  static const std::vector<int> kEmpty;
  if (v < 1 || v > n_) return kEmpty;
  return adjacency_[v];
}

bool InputGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_ + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

InputGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int maxv = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) throw GraphParseError("edge line with a single endpoint: " + line);
    edges.push_back({u, v});
    maxv = std::max({maxv, u, v});
  }
  return InputGraph(maxv, std::move(edges));
}

InputGraph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "c") continue;
    if (head == "p") {
      std::string fmt;
      long long m = 0;
      if (!(ls >> fmt >> n >> m)) throw GraphParseError("bad DIMACS problem line: " + line);
    } else if (head == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw GraphParseError("bad DIMACS edge line: " + line);
      edges.push_back({u, v});
    }
  }
  if (n == 0) throw GraphParseError("DIMACS input without a problem line");
  return InputGraph(n, std::move(edges));
}

InputGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphParseError(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges"))
    throw GraphParseError("graph JSON requires fields n and edges");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw GraphParseError("edges entries must be pairs");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return InputGraph(n, std::move(edges));
}

InputGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".col")) return parse_dimacs(text);
  if (ends_with(".json")) return parse_graph_json(text);
  return parse_edge_list(text);
}

std::string graph_to_json(const InputGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return j.dump();
}

}  // namespace pm
