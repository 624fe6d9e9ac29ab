#pragma once
// The computing platform: holds free data, free probes and the growing
// aggregations, and runs probe operations under the three fundamental
// functions (high cohesiveness, order threshold, uniqueness).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pm/aggregation.hpp"
#include "pm/detector.hpp"
#include "pm/library.hpp"

namespace pm {

enum class OpError {
  kNone,
  kThresholdViolation,   // fundamental function 2
  kUniquenessViolation,  // fundamental function 3
  kFiberMismatch,
  kFiberOccupied,
  kNoLegalTarget,
  kInsufficientInventory,
};

std::string to_string(OpError e);

struct EngineMode {
  enum Value { kExhaustive, kStochastic };
};

struct EngineConfig {
  std::uint64_t seed = 0;
  long long max_steps = -1;  // <0 = unbounded (runs until no probe applies)
};

// (aggregation index, instance id, fiber tag)
struct Endpoint {
  int agg = -1;
  int instance = -1;
  std::string tag;
};

struct TraceRecord {
  long long step = 0;
  ProbeType probe;
  Endpoint a, b;
  int order_a = 0, order_b = 0;  // orders before the operation (b = 0 if intra)
  int merged_order = 0;
};

using TraceSink = std::function<void(const TraceRecord&)>;

class PlatformState {
 public:
  // Loads `data_counts` copies per body as free 1-aggregations and
  // `probe_counts` free probe copies; threshold comes from the target graph.
  // Throws PlatformError(kInsufficientInventory) if a pool cannot supply.
  static PlatformState load(const DataLibrary& data, const ProbeLibrary& probes,
                            const std::map<int, long long>& data_counts,
                            const std::map<ProbeType, long long>& probe_counts,
                            const ProbeOperationGraph& target);

  // Convenience: same copy count for every type in both libraries.
  static PlatformState load_uniform(const DataLibrary& data, const ProbeLibrary& probes,
                                    long long copies, const ProbeOperationGraph& target);

  const DataLibrary& data() const { return *data_; }
  int threshold() const { return threshold_; }

  const std::vector<Aggregation>& aggregations() const { return aggregations_; }
  const std::map<ProbeType, long long>& free_probes() const { return free_probes_; }
  int body_of(int instance) const { return instance_bodies_.at(instance); }

  long long instance_count() const { return static_cast<long long>(instance_bodies_.size()); }
  long long free_probe_count() const;
  long long bond_count() const;
  int free_data_count() const;  // 1-aggregations

  // One basic probe operation. Checks every precondition; on success the two
  // aggregations merge (or one gains an internal bond) and a probe copy is
  // consumed.
  OpError basic_probe_operation(const ProbeType& probe, const Endpoint& a,
                                const Endpoint& b);

  // Legality check without mutation.
  OpError check_operation(const ProbeType& probe, const Endpoint& a,
                          const Endpoint& b) const;

  // High-cohesiveness target selection for one probe:
  //   - pairs violating threshold/uniqueness are excluded up front
  //   - inter-aggregation merges are preferred over intra bonds
  //   - larger order wins, then larger bond count, remaining ties uniform
  // Returns nullopt when no legal endpoint pair exists.
  std::optional<std::pair<Endpoint, Endpoint>> select_targets(const ProbeType& probe,
                                                              std::mt19937_64& rng) const;

  // Seeded stochastic run: repeatedly draws a free probe uniformly at random
  // among those with a legal target, applies it at the selected endpoints, and
  // stops when nothing applies (or after config.max_steps operations).
  // Returns the final multiset of aggregations, canonicalized.
  std::vector<CanonicalAggregation> run_stochastic(const EngineConfig& config,
                                                   const TraceSink& trace = nullptr);

  std::vector<CanonicalAggregation> theta() const;

  // Debug audit used by tests: order threshold, per-aggregation uniqueness,
  // fiber occupancy, and conservation against the loaded totals.
  void check_invariants() const;

 private:
  const DataLibrary* data_ = nullptr;
  const ProbeLibrary* probes_ = nullptr;
  int threshold_ = 1;
  std::vector<Aggregation> aggregations_;
  std::map<int, int> instance_bodies_;
  std::map<ProbeType, long long> free_probes_;
  long long loaded_instances_ = 0;
  long long loaded_probes_ = 0;

  const DataType& type_of(int instance) const;
  bool fiber_available(const Aggregation& agg, int instance, const std::string& tag) const;
  std::vector<Endpoint> endpoint_candidates(const FiberRef& fiber) const;
};

struct PlatformError : std::runtime_error {
  OpError code;
  PlatformError(OpError c, const std::string& what)
      : std::runtime_error(what), code(c) {}
};

// Idealized exhaustive enumeration (unlimited copies): every distinct
// aggregation, exactly once, whose bond graph realizes one of the targets.
// Backtracks over one data type per target slot and one probe per target edge,
// honoring fiber consistency and uniqueness.
std::set<CanonicalAggregation> enumerate_exhaustive(const DataLibrary& data,
                                                    const ProbeLibrary& probes,
                                                    const ProbeOperationGraph& target);

}  // namespace pm
