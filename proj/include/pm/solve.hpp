#pragma once
// End-to-end pipelines: encode -> run -> detect -> decode, with decode
// validation as the final authority on what counts as a problem solution.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pm/encoders.hpp"
#include "pm/oracles.hpp"
#include "pm/platform.hpp"

namespace pm {

enum class RunMode { kExhaustive, kStochastic };

struct SolveOptions {
  RunMode mode = RunMode::kExhaustive;
  std::uint64_t seed = 0;
  long long copies = 10;    // per type, stochastic mode
  long long max_steps = -1;
  TraceSink trace;
};

struct RunReport {
  std::string problem;      // "hamilton" | "coloring"
  std::string mode;         // "exhaustive" | "stochastic"
  std::uint64_t seed = 0;
  int data_types = 0;       // n
  long long fiber_types = 0;  // p
  int probe_types = 0;
  int sublibraries = 0;     // non-empty group-pair sub-libraries
  long long theta = 0;      // |Theta|
  long long accepted = 0;   // |Q|
  long long residues = 0;   // |C|
  long long solutions = 0;  // decoded, deduplicated
  double wall_ms = 0.0;
};

struct HamiltonSolveResult {
  RunReport report;
  std::vector<CanonicalAggregation> accepted;   // Q
  std::set<CanonicalCycle> cycles;              // decoded + validated, distinct
};

struct ColoringSolveResult {
  RunReport report;
  std::vector<CanonicalAggregation> accepted;
  std::set<std::vector<std::pair<int, std::string>>> colorings;  // vertex -> color, sorted
};

HamiltonSolveResult solve_hamilton(const HamiltonInstance& instance, const SolveOptions& opts);
ColoringSolveResult solve_coloring(const ColoringInstance& instance, const SolveOptions& opts);

}  // namespace pm
