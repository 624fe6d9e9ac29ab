#include "pm/platform.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace pm {

std::string to_string(OpError e) {
  switch (e) {
    case OpError::kNone: return "None";
    case OpError::kThresholdViolation: return "ThresholdViolation";
    case OpError::kUniquenessViolation: return "UniquenessViolation";
    case OpError::kFiberMismatch: return "FiberMismatch";
    case OpError::kFiberOccupied: return "FiberOccupied";
    case OpError::kNoLegalTarget: return "NoLegalTarget";
    case OpError::kInsufficientInventory: return "InsufficientInventory";
  }
  return "?";
}

PlatformState PlatformState::load(const DataLibrary& data, const ProbeLibrary& probes,
                                  const std::map<int, long long>& data_counts,
                                  const std::map<ProbeType, long long>& probe_counts,
                                  const ProbeOperationGraph& target) {
  PlatformState st;
  st.data_ = &data;
  st.probes_ = &probes;
  st.threshold_ = target.threshold();
  for (const auto& [body, count] : data_counts) {
    if (count < 0)
      throw PlatformError(OpError::kInsufficientInventory,
                          "load: copy count must be finite for body " + std::to_string(body));
    const DataType* type = data.find(body);
    if (type == nullptr)
      throw PlatformError(OpError::kInsufficientInventory,
                          "load: unknown body " + std::to_string(body));
    const long long pool = data.copies(body);
    if (pool != kUnbounded && pool < count)
      throw PlatformError(OpError::kInsufficientInventory,
                          "load: pool of body " + std::to_string(body) + " holds " +
                              std::to_string(pool) + ", requested " + std::to_string(count));
    for (long long i = 0; i < count; ++i) {
      const int id = static_cast<int>(st.instance_bodies_.size());
      st.instance_bodies_[id] = body;
      Aggregation free_datum;
      free_datum.instances = {id};
      st.aggregations_.push_back(std::move(free_datum));
    }
  }
  for (const auto& [probe, count] : probe_counts) {
    if (count < 0)
      throw PlatformError(OpError::kInsufficientInventory,
                          "load: probe copy count must be finite");
    const long long pool = probes.copies(probe);
    if (pool != kUnbounded && pool < count)
      throw PlatformError(OpError::kInsufficientInventory,
                          "load: probe pool of " + to_string(probe) + " holds " +
                              std::to_string(pool) + ", requested " + std::to_string(count));
    if (count > 0) st.free_probes_[probe.normalized()] = count;
  }
  st.loaded_instances_ = st.instance_count();
  st.loaded_probes_ = st.free_probe_count();
  return st;
}

PlatformState PlatformState::load_uniform(const DataLibrary& data, const ProbeLibrary& probes,
                                          long long copies, const ProbeOperationGraph& target) {
  std::map<int, long long> dc;
  for (const auto& t : data.types) dc[t.body] = copies;
  std::map<ProbeType, long long> pc;
  for (const auto& p : probes.probes) pc[p] = copies;
  return load(data, probes, dc, pc, target);
}

long long PlatformState::free_probe_count() const {
  long long total = 0;
  for (const auto& [probe, count] : free_probes_) total += count;
  return total;
}

long long PlatformState::bond_count() const {
  long long total = 0;
  for (const auto& agg : aggregations_) total += agg.bond_count();
  return total;
}

int PlatformState::free_data_count() const {
  int total = 0;
  for (const auto& agg : aggregations_)
    if (agg.order() == 1) ++total;
  return total;
}

const DataType& PlatformState::type_of(int instance) const {
  const DataType* t = data_->find(instance_bodies_.at(instance));
  assert(t != nullptr);
  return *t;
}

bool PlatformState::fiber_available(const Aggregation& agg, int instance,
                                    const std::string& tag) const {
  const DataType& type = type_of(instance);
  if (type.fiber_use == FiberUse::kPorts) {
    for (const auto& b : agg.bonds) {
      if ((b.inst_a == instance && b.tag_a == tag) || (b.inst_b == instance && b.tag_b == tag))
        return false;
    }
    return true;
  }
  // exclusive: all bonds of the instance must share one tag
  for (const auto& b : agg.bonds) {
    if (b.inst_a == instance && b.tag_a != tag) return false;
    if (b.inst_b == instance && b.tag_b != tag) return false;
  }
  return true;
}

OpError PlatformState::check_operation(const ProbeType& probe, const Endpoint& a,
                                       const Endpoint& b) const {
  if (a.agg < 0 || b.agg < 0 || a.agg >= static_cast<int>(aggregations_.size()) ||
      b.agg >= static_cast<int>(aggregations_.size()))
    return OpError::kFiberMismatch;
  const Aggregation& agg_a = aggregations_[a.agg];
  const Aggregation& agg_b = aggregations_[b.agg];
  if (!agg_a.contains(a.instance) || !agg_b.contains(b.instance))
    return OpError::kFiberMismatch;
  const int body_a = instance_bodies_.at(a.instance);
  const int body_b = instance_bodies_.at(b.instance);
  if (body_a != probe.a.body || a.tag != probe.a.tag || body_b != probe.b.body ||
      b.tag != probe.b.tag)
    return OpError::kFiberMismatch;
  if (!type_of(a.instance).has_fiber(a.tag) || !type_of(b.instance).has_fiber(b.tag))
    return OpError::kFiberMismatch;
  if (!fiber_available(agg_a, a.instance, a.tag) || !fiber_available(agg_b, b.instance, b.tag))
    return OpError::kFiberOccupied;
  if (a.agg == b.agg) {
    // internal bond: uniqueness means at most one bond per data pair
    if (a.instance == b.instance) return OpError::kUniquenessViolation;
    if (agg_a.has_bond_between(a.instance, b.instance)) return OpError::kUniquenessViolation;
    return OpError::kNone;
  }
  if (agg_a.order() + agg_b.order() > threshold_) return OpError::kThresholdViolation;
  // merged aggregation may hold at most one data per type
  std::set<int> bodies;
  for (int inst : agg_a.instances) bodies.insert(instance_bodies_.at(inst));
  for (int inst : agg_b.instances)
    if (!bodies.insert(instance_bodies_.at(inst)).second) return OpError::kUniquenessViolation;
  return OpError::kNone;
}

OpError PlatformState::basic_probe_operation(const ProbeType& probe, const Endpoint& a,
                                             const Endpoint& b) {
  const ProbeType norm = probe.normalized();
  auto it = free_probes_.find(norm);
  if (it == free_probes_.end() || it->second <= 0) return OpError::kInsufficientInventory;
  // connective endpoints may arrive swapped relative to the normalized probe
  Endpoint ea = a, eb = b;
  if (norm.kind == ProbeKind::kConnective && check_operation(norm, ea, eb) == OpError::kFiberMismatch) {
    std::swap(ea, eb);
  }
  if (OpError err = check_operation(norm, ea, eb); err != OpError::kNone) return err;

  Bond bond{ea.instance, ea.tag, eb.instance, eb.tag, norm};
  if (ea.agg == eb.agg) {
    aggregations_[ea.agg].bonds.push_back(std::move(bond));
  } else {
    const int keep = std::min(ea.agg, eb.agg);
    const int drop = std::max(ea.agg, eb.agg);
    Aggregation& dst = aggregations_[keep];
    Aggregation& src = aggregations_[drop];
    dst.instances.insert(dst.instances.end(), src.instances.begin(), src.instances.end());
    std::sort(dst.instances.begin(), dst.instances.end());
    dst.bonds.insert(dst.bonds.end(), src.bonds.begin(), src.bonds.end());
    dst.bonds.push_back(std::move(bond));
    aggregations_.erase(aggregations_.begin() + drop);
  }
  if (--it->second == 0) free_probes_.erase(it);
  return OpError::kNone;
}

std::vector<Endpoint> PlatformState::endpoint_candidates(const FiberRef& fiber) const {
  std::vector<Endpoint> out;
  for (int ai = 0; ai < static_cast<int>(aggregations_.size()); ++ai) {
    const Aggregation& agg = aggregations_[ai];
    for (int inst : agg.instances) {
      if (instance_bodies_.at(inst) != fiber.body) continue;
      if (!fiber_available(agg, inst, fiber.tag)) continue;
      out.push_back(Endpoint{ai, inst, fiber.tag});
      break;  // at most one instance per type per aggregation
    }
  }
  return out;
}

std::optional<std::pair<Endpoint, Endpoint>> PlatformState::select_targets(
    const ProbeType& probe, std::mt19937_64& rng) const {
  const ProbeType norm = probe.normalized();
  const std::vector<Endpoint> side_a = endpoint_candidates(norm.a);
  const std::vector<Endpoint> side_b = endpoint_candidates(norm.b);
  if (side_a.empty() || side_b.empty()) return std::nullopt;

  std::vector<std::pair<Endpoint, Endpoint>> legal;
  bool any_inter = false;
  for (const auto& ea : side_a) {
    for (const auto& eb : side_b) {
      if (check_operation(norm, ea, eb) != OpError::kNone) continue;
      if (ea.agg != eb.agg) any_inter = true;
      legal.push_back({ea, eb});
    }
  }
  if (legal.empty()) return std::nullopt;
  if (any_inter) {
    std::erase_if(legal, [](const auto& pr) { return pr.first.agg == pr.second.agg; });
  }

  // high cohesiveness: larger order first, then more bonds, remaining ties uniform
  auto rank = [&](int agg_index) {
    const Aggregation& agg = aggregations_[agg_index];
    return std::pair<int, int>(agg.order(), agg.bond_count());
  };
  std::pair<int, int> best_a{-1, -1};
  for (const auto& pr : legal) best_a = std::max(best_a, rank(pr.first.agg));
  std::vector<int> tied_a;
  for (const auto& pr : legal) {
    if (rank(pr.first.agg) == best_a &&
        (tied_a.empty() || tied_a.back() != pr.first.agg))
      tied_a.push_back(pr.first.agg);
  }
  std::sort(tied_a.begin(), tied_a.end());
  tied_a.erase(std::unique(tied_a.begin(), tied_a.end()), tied_a.end());
  const int chosen_a = tied_a[tied_a.size() == 1
                                  ? 0
                                  : std::uniform_int_distribution<size_t>(0, tied_a.size() - 1)(rng)];

  std::pair<int, int> best_b{-1, -1};
  for (const auto& pr : legal)
    if (pr.first.agg == chosen_a) best_b = std::max(best_b, rank(pr.second.agg));
  std::vector<int> tied_b;
  for (const auto& pr : legal)
    if (pr.first.agg == chosen_a && rank(pr.second.agg) == best_b)
      tied_b.push_back(pr.second.agg);
  std::sort(tied_b.begin(), tied_b.end());
  tied_b.erase(std::unique(tied_b.begin(), tied_b.end()), tied_b.end());
  const int chosen_b = tied_b[tied_b.size() == 1
                                  ? 0
                                  : std::uniform_int_distribution<size_t>(0, tied_b.size() - 1)(rng)];

  for (const auto& pr : legal)
    if (pr.first.agg == chosen_a && pr.second.agg == chosen_b) return pr;
  return std::nullopt;  // unreachable
}

std::vector<CanonicalAggregation> PlatformState::run_stochastic(const EngineConfig& config,
                                                                const TraceSink& trace) {
  std::mt19937_64 rng(config.seed);
  long long steps = 0;
  while (config.max_steps < 0 || steps < config.max_steps) {
    // probe types currently holding free copies, in deterministic order
    std::vector<std::pair<ProbeType, long long>> alive(free_probes_.begin(), free_probes_.end());
    std::optional<std::pair<Endpoint, Endpoint>> chosen;
    ProbeType probe;
    while (!alive.empty()) {
      long long total = 0;
      for (const auto& [p, c] : alive) total += c;
      long long pick = std::uniform_int_distribution<long long>(0, total - 1)(rng);
      size_t idx = 0;
      while (pick >= alive[idx].second) pick -= alive[idx++].second;
      probe = alive[idx].first;
      chosen = select_targets(probe, rng);
      if (chosen) break;
      alive.erase(alive.begin() + static_cast<long long>(idx));
    }
    if (!chosen) break;
    const auto& [ea, eb] = *chosen;
    TraceRecord rec;
    rec.step = steps;
    rec.probe = probe;
    rec.a = ea;
    rec.b = eb;
    rec.order_a = aggregations_[ea.agg].order();
    rec.order_b = ea.agg == eb.agg ? 0 : aggregations_[eb.agg].order();
    rec.merged_order = ea.agg == eb.agg ? rec.order_a : rec.order_a + rec.order_b;
    const OpError err = basic_probe_operation(probe, ea, eb);
    assert(err == OpError::kNone);
    (void)err;
    if (trace) trace(rec);
    ++steps;
#ifndef NDEBUG
    check_invariants();
#endif
  }
  return theta();
}

std::vector<CanonicalAggregation> PlatformState::theta() const {
  std::vector<int> bodies(instance_bodies_.size());
  for (const auto& [id, body] : instance_bodies_) bodies[id] = body;
  std::vector<CanonicalAggregation> out;
  out.reserve(aggregations_.size());
  for (const auto& agg : aggregations_) out.push_back(canonicalize(agg, bodies));
  return out;
}

void PlatformState::check_invariants() const {
  auto fail = [](const std::string& what) { throw std::logic_error("platform invariant: " + what); };
  long long instances = 0;
  std::set<int> seen;
  for (const auto& agg : aggregations_) {
    if (agg.order() > threshold_) fail("order above threshold");
    instances += agg.order();
    std::set<int> bodies;
    for (int inst : agg.instances) {
      if (!seen.insert(inst).second) fail("instance in two aggregations");
      if (!bodies.insert(instance_bodies_.at(inst)).second) fail("duplicate data type");
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& b : agg.bonds) {
      if (!agg.contains(b.inst_a) || !agg.contains(b.inst_b)) fail("bond leaves aggregation");
      auto key = std::minmax(b.inst_a, b.inst_b);
      if (!pairs.insert({key.first, key.second}).second) fail("duplicate pair bond");
    }
    // fiber occupancy per mode
    for (int inst : agg.instances) {
      const DataType& type = type_of(inst);
      std::map<std::string, int> used;
      for (const auto& b : agg.bonds) {
        if (b.inst_a == inst) ++used[b.tag_a];
        if (b.inst_b == inst) ++used[b.tag_b];
      }
      if (type.fiber_use == FiberUse::kPorts) {
        for (const auto& [tag, count] : used)
          if (count > 1) fail("port fiber bonded twice");
      } else if (used.size() > 1) {
        fail("exclusive instance using two fiber tags");
      }
    }
    // connectivity
    if (agg.order() > 1) {
      std::map<int, std::vector<int>> adj;
      for (const auto& b : agg.bonds) {
        adj[b.inst_a].push_back(b.inst_b);
        adj[b.inst_b].push_back(b.inst_a);
      }
      std::set<int> reach;
      std::vector<int> stack{agg.instances.front()};
      reach.insert(agg.instances.front());
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
          if (reach.insert(u).second) stack.push_back(u);
      }
      if (static_cast<int>(reach.size()) != agg.order()) fail("aggregation not connected");
    }
  }
  if (instances != loaded_instances_) fail("data conservation");
  if (free_probe_count() + bond_count() != loaded_probes_) fail("probe conservation");
}

// ---- idealized exhaustive enumeration ----

namespace {

struct SlotUse {
  FiberUse mode = FiberUse::kPorts;
  std::map<std::string, int> used;

  bool can_use(const std::string& tag) const {
    if (mode == FiberUse::kPorts) return used.find(tag) == used.end();
    return used.empty() || used.begin()->first == tag;
  }
  void take(const std::string& tag) { ++used[tag]; }
  void release(const std::string& tag) {
    auto it = used.find(tag);
    if (--it->second == 0) used.erase(it);
  }
};

}  // namespace

std::set<CanonicalAggregation> enumerate_exhaustive(const DataLibrary& data,
                                                    const ProbeLibrary& probes,
                                                    const ProbeOperationGraph& target) {
  std::set<CanonicalAggregation> solutions;
  // probes joining two bodies, indexed by unordered body pair
  std::map<std::pair<int, int>, std::vector<ProbeType>> between;
  for (const auto& p : probes.probes) {
    auto key = std::minmax(p.a.body, p.b.body);
    between[{key.first, key.second}].push_back(p);
  }

  for (const auto& t : target.targets) {
    if (t.order == 0) continue;
    // slot order: each slot after the first attaches to an assigned one
    std::vector<int> order;
    std::vector<char> placed(t.order, 0);
    std::vector<std::vector<int>> slot_adj(t.order);
    for (auto [i, j] : t.edges) {
      slot_adj[i].push_back(j);
      slot_adj[j].push_back(i);
    }
    order.push_back(0);
    placed[0] = 1;
    while (static_cast<int>(order.size()) < t.order) {
      int next = -1;
      for (int v = 0; v < t.order && next == -1; ++v) {
        if (placed[v]) continue;
        for (int u : slot_adj[v])
          if (placed[u]) { next = v; break; }
      }
      if (next == -1) {
        // disconnected target: take any remaining slot
        for (int v = 0; v < t.order && next == -1; ++v)
          if (!placed[v]) next = v;
      }
      placed[next] = 1;
      order.push_back(next);
    }

    std::vector<const DataType*> assigned(t.order, nullptr);
    std::vector<SlotUse> use(t.order);
    std::set<int> used_bodies;
    std::vector<CanonicalBond> bonds;

    // edges from order[depth] into the already-assigned prefix
    std::vector<std::vector<int>> back_edges(t.order);
    {
      std::vector<int> position(t.order);
      for (int d = 0; d < t.order; ++d) position[order[d]] = d;
      for (int d = 0; d < t.order; ++d) {
        for (int u : slot_adj[order[d]])
          if (position[u] < d) back_edges[d].push_back(u);
      }
    }

    std::function<void(int, size_t)> place_edges;  // bonds for back_edges[depth]
    std::function<void(int)> place_slot;

    place_slot = [&](int depth) {
      if (depth == t.order) {
        CanonicalAggregation agg;
        for (const auto* type : assigned) agg.bodies.push_back(type->body);
        std::sort(agg.bodies.begin(), agg.bodies.end());
        agg.bonds = bonds;
        std::sort(agg.bonds.begin(), agg.bonds.end());
        solutions.insert(std::move(agg));
        return;
      }
      const int slot = order[depth];
      for (const auto& type : data.types) {
        if (t.body_labeled() && type.body != t.slot_bodies[slot]) continue;
        if (used_bodies.count(type.body)) continue;
        assigned[slot] = &type;
        used_bodies.insert(type.body);
        use[slot] = SlotUse{type.fiber_use, {}};
        place_edges(depth, 0);
        used_bodies.erase(type.body);
        assigned[slot] = nullptr;
      }
    };

    place_edges = [&](int depth, size_t edge_index) {
      const int slot = order[depth];
      if (edge_index == back_edges[depth].size()) {
        place_slot(depth + 1);
        return;
      }
      const int other = back_edges[depth][edge_index];
      const DataType* ts = assigned[slot];
      const DataType* to = assigned[other];
      auto key = std::minmax(ts->body, to->body);
      auto it = between.find({key.first, key.second});
      if (it == between.end()) return;
      for (const auto& probe : it->second) {
        // orient the probe onto (slot, other)
        const bool forward = probe.a.body == ts->body;
        const FiberRef& fs = forward ? probe.a : probe.b;
        const FiberRef& fo = forward ? probe.b : probe.a;
        if (fs.body != ts->body || fo.body != to->body) continue;
        if (!use[slot].can_use(fs.tag) || !use[other].can_use(fo.tag)) continue;
        use[slot].take(fs.tag);
        use[other].take(fo.tag);
        // record the bond in probe orientation (keeps transitive direction)
        bonds.push_back(make_canonical_bond(probe.a.body, probe.a.tag, probe.b.body,
                                            probe.b.tag, probe.kind));
        place_edges(depth, edge_index + 1);
        bonds.pop_back();
        use[slot].release(fs.tag);
        use[other].release(fo.tag);
      }
    };

    place_slot(0);
  }
  return solutions;
}

}  // namespace pm
