#pragma once
// Simple undirected input graphs (1-based vertex labels) and file parsing.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pm {

struct GraphParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undirected simple graph on vertices 1..n.
class InputGraph {
 public:
  InputGraph() = default;
  InputGraph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool connected() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;       // normalized u < v, sorted
  std::vector<std::vector<int>> adjacency_;      // 1-based
};

// Parses "u v" edge-list text, DIMACS .col, or JSON {"n":..,"edges":[[u,v],..]}.
// Format is chosen by file extension (.col -> DIMACS, .json -> JSON, else edge list).
InputGraph load_graph(const std::string& path);

InputGraph parse_edge_list(const std::string& text);
InputGraph parse_dimacs(const std::string& text);
InputGraph parse_graph_json(const std::string& text);

std::string graph_to_json(const InputGraph& g);

}  // namespace pm
