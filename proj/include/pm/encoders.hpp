#pragma once
// Problem encoders/decoders: Hamilton cycles via cover-centered 2-paths,
// k-coloring via one fiber per candidate color.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pm/detector.hpp"
#include "pm/graph.hpp"
#include "pm/library.hpp"

namespace pm {

struct EncodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- vertex cover ----

struct CoverResult {
  std::vector<int> cover;  // sorted
  bool exact = true;       // false: greedy 2-approximation fallback
};

// Exact minimum vertex cover (branch and bound), deterministic lexicographic
// tie-break among optima. Falls back to the greedy 2-approximation above
// `exact_limit` vertices.
CoverResult min_vertex_cover(const InputGraph& g, int exact_limit = 32);

// ---- Hamilton ----

// The 2-path v_l v_i v_j, canonicalized l < j; fibers are tagged l and j.
struct TwoPathDatum {
  int center = 0;
  int l = 0;
  int j = 0;
};

struct HamiltonInstance {
  InputGraph graph;
  std::vector<int> cover;
  DataLibrary data;
  ProbeLibrary probes;
  ProbeOperationGraph target;           // cycles of order ceil(n/2) .. |cover|
  std::map<int, TwoPathDatum> datum_of; // body -> 2-path
};

// Requires n >= 5 and a simple graph. Every cover vertex must have degree >= 2
// (otherwise the instance is infeasible and NoTwoPaths is reported).
HamiltonInstance encode_hamilton(const InputGraph& g,
                                 const std::optional<std::vector<int>>& cover = std::nullopt);

enum class DecodeStatus { kOk, kNotACycle, kNotSpanning, kEdgeNotInGraph, kImproperColoring };

std::string to_string(DecodeStatus s);

struct DecodedCycle {
  DecodeStatus status = DecodeStatus::kOk;
  std::vector<int> cycle;  // canonical: smallest vertex first, smaller neighbor second
};

// Expands each datum into its two graph edges, unions them, and validates that
// the result is a Hamilton cycle of `instance.graph`.
DecodedCycle decode_hamilton(const CanonicalAggregation& m, const HamiltonInstance& instance);

// ---- coloring ----

struct ColorCandidateTable {
  int k = 0;
  std::vector<std::string> palette;          // k color names
  std::map<int, std::vector<std::string>> candidates;  // vertex -> allowed colors
};

struct FixedClasses {
  std::vector<int> vertices;          // V'', sorted
  std::map<int, std::string> color;   // canonical color per fixed vertex
  long long coloring_orbits = 0;      // number of k-colorings up to permutation
};

// V'': the maximum vertex set whose pairwise same-class relation is invariant
// across all k-colorings and which spans exactly k classes (empty when none).
// Enumerates colorings with the oracle; guarded by `vertex_limit`.
FixedClasses fixed_classes(const InputGraph& g, int k, int vertex_limit = 20);

// Default palette: r, y, b, g, then c4, c5, ...
std::vector<std::string> default_palette(int k);

// Candidate table from fixed classes: fixed vertices keep their single color,
// the rest get every color not used by a fixed neighbor.
ColorCandidateTable candidates_from_fixed(const InputGraph& g, int k, const FixedClasses& fixed);
ColorCandidateTable full_candidates(const InputGraph& g, int k);

struct ColoringInstance {
  InputGraph graph;
  ColorCandidateTable table;
  DataLibrary data;        // one type per vertex, exclusive fibers
  ProbeLibrary probes;     // per edge, one probe per distinct color pair
  ProbeOperationGraph target;  // G itself, body-labeled
};

// Requires a connected graph and a non-empty candidate set per vertex.
ColoringInstance encode_coloring(const InputGraph& g, int k, const ColorCandidateTable& table);

struct DecodedColoring {
  DecodeStatus status = DecodeStatus::kOk;
  std::map<int, std::string> color;  // vertex -> color name
};

// Reads each instance's single bonded fiber as its color and validates
// properness against the instance graph.
DecodedColoring decode_coloring(const CanonicalAggregation& m, const ColoringInstance& instance);

}  // namespace pm
