#include "pm/solve.hpp"

#include <chrono>
#include <set>

namespace pm {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int count_sublibraries(const DataLibrary& data, const ProbeLibrary& probes) {
  std::map<int, int> group_of;
  for (const auto& t : data.types) group_of[t.body] = t.group;
  std::set<std::pair<int, int>> pairs;
  for (const auto& p : probes.probes) {
    const int ga = group_of.at(p.a.body);
    const int gb = group_of.at(p.b.body);
    pairs.insert(std::minmax(ga, gb));
  }
  return static_cast<int>(pairs.size());
}

std::vector<CanonicalAggregation> run_engine(const DataLibrary& data, const ProbeLibrary& probes,
                                             const ProbeOperationGraph& target,
                                             const SolveOptions& opts, RunReport& report) {
  if (opts.mode == RunMode::kExhaustive) {
    report.mode = "exhaustive";
    auto sols = enumerate_exhaustive(data, probes, target);
    return {sols.begin(), sols.end()};
  }
  report.mode = "stochastic";
  PlatformState state = PlatformState::load_uniform(data, probes, opts.copies, target);
  EngineConfig config;
  config.seed = opts.seed;
  config.max_steps = opts.max_steps;
  return state.run_stochastic(config, opts.trace);
}

void fill_library_stats(const DataLibrary& data, const ProbeLibrary& probes, RunReport& report) {
  report.data_types = data.type_count();
  report.fiber_types = data.total_fiber_count();
  report.probe_types = probes.type_count();
  report.sublibraries = count_sublibraries(data, probes);
}

}  // namespace

HamiltonSolveResult solve_hamilton(const HamiltonInstance& instance, const SolveOptions& opts) {
  Timer timer;
  HamiltonSolveResult result;
  result.report.problem = "hamilton";
  result.report.seed = opts.seed;
  fill_library_stats(instance.data, instance.probes, result.report);

  const auto theta = run_engine(instance.data, instance.probes, instance.target, opts,
                                result.report);
  SolutionStore store = separate(theta, instance.target);
  result.report.theta = static_cast<long long>(theta.size());
  result.report.accepted = static_cast<long long>(store.accepted.size());
  result.report.residues = static_cast<long long>(store.residues.size());
  result.accepted = std::move(store.accepted);

  // decode validation is the final authority on what counts as a solution
  for (const auto& agg : result.accepted) {
    const DecodedCycle decoded = decode_hamilton(agg, instance);
    if (decoded.status == DecodeStatus::kOk) result.cycles.insert(decoded.cycle);
  }
  result.report.solutions = static_cast<long long>(result.cycles.size());
  result.report.wall_ms = timer.ms();
  return result;
}

ColoringSolveResult solve_coloring(const ColoringInstance& instance, const SolveOptions& opts) {
  Timer timer;
  ColoringSolveResult result;
  result.report.problem = "coloring";
  result.report.seed = opts.seed;
  fill_library_stats(instance.data, instance.probes, result.report);

  const auto theta = run_engine(instance.data, instance.probes, instance.target, opts,
                                result.report);
  SolutionStore store = separate(theta, instance.target);
  result.report.theta = static_cast<long long>(theta.size());
  result.report.accepted = static_cast<long long>(store.accepted.size());
  result.report.residues = static_cast<long long>(store.residues.size());
  result.accepted = std::move(store.accepted);

  for (const auto& agg : result.accepted) {
    const DecodedColoring decoded = decode_coloring(agg, instance);
    if (decoded.status != DecodeStatus::kOk) continue;
    std::vector<std::pair<int, std::string>> flat(decoded.color.begin(), decoded.color.end());
    result.colorings.insert(std::move(flat));
  }
  result.report.solutions = static_cast<long long>(result.colorings.size());
  result.report.wall_ms = timer.ms();
  return result;
}

}  // namespace pm
