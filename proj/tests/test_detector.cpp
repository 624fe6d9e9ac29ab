#include <random>

#include "doctest.h"
#include "pm/detector.hpp"
#include "pm/oracles.hpp"
#include "pm/platform.hpp"
#include "pm/solve.hpp"
#include "test_util.hpp"

using namespace pm;
using namespace pm::testutil;

namespace {

CanonicalAggregation chain(int length, bool close) {
  // bodies 1..length joined in a path or cycle on fibers a/b
  CanonicalAggregation agg;
  for (int i = 1; i <= length; ++i) agg.bodies.push_back(i);
  for (int i = 1; i < length; ++i)
    agg.bonds.push_back(make_canonical_bond(i, "b", i + 1, "a", ProbeKind::kConnective));
  if (close)
    agg.bonds.push_back(make_canonical_bond(length, "b", 1, "a", ProbeKind::kConnective));
  std::sort(agg.bonds.begin(), agg.bonds.end());
  return agg;
}

ProbeOperationGraph cycles(std::initializer_list<int> orders) {
  ProbeOperationGraph g;
  for (int m : orders) g.targets.push_back(TargetGraph::cycle(m));
  return g;
}

// independent oracle: isomorphism by exhaustive permutation (n <= 8)
bool permutation_isomorphic(int n, std::vector<std::pair<int, int>> e1,
                            std::vector<std::pair<int, int>> e2) {
  if (e1.size() != e2.size()) return false;
  auto norm = [](std::vector<std::pair<int, int>> es) {
    for (auto& [u, v] : es)
      if (u > v) std::swap(u, v);
    std::sort(es.begin(), es.end());
    return es;
  };
  const auto target = norm(e2);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : e1) mapped.push_back({perm[u], perm[v]});
    if (norm(mapped) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("prefilter compares counts against every target") {
  const auto targets = cycles({4, 5});
  CHECK(prefilter(chain(5, true), targets));
  CHECK(prefilter(chain(4, true), targets));
  CHECK_FALSE(prefilter(chain(4, false), targets));  // a 4-cycle needs 4 bonds

  TargetGraph g12_target;
  g12_target.order = 12;
  ProbeOperationGraph big{{g12_target}};
  CHECK_FALSE(prefilter(chain(11, false), big));
}

TEST_CASE("isomorphism detection") {
  CHECK(is_true_solution(chain(3, true), cycles({3})));
  CHECK_FALSE(is_true_solution(chain(4, false), cycles({4})));  // path vs cycle
  CHECK(is_true_solution(chain(5, true), cycles({4, 5})));
  CHECK(is_true_solution(chain(4, true), cycles({4, 5})));

  SUBCASE("count-equal but non-isomorphic graphs are rejected") {
    // triangle with a pendant: 4 vertices and 4 edges, same counts as C4
    CanonicalAggregation lollipop;
    lollipop.bodies = {1, 2, 3, 4};
    lollipop.bonds = {make_canonical_bond(1, "a", 2, "a", ProbeKind::kConnective),
                      make_canonical_bond(2, "b", 3, "a", ProbeKind::kConnective),
                      make_canonical_bond(1, "b", 3, "b", ProbeKind::kConnective),
                      make_canonical_bond(3, "c", 4, "a", ProbeKind::kConnective)};
    std::sort(lollipop.bonds.begin(), lollipop.bonds.end());
    CHECK(prefilter(lollipop, cycles({4})));
    CHECK_FALSE(is_true_solution(lollipop, cycles({4})));
  }
}

TEST_CASE("isomorphism agrees with a brute-force permutation oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(2, 6);
  std::bernoulli_distribution flip(0.5);
  for (int round = 0; round < 200; ++round) {
    const int n = size(rng);
    auto make_edges = [&]() {
      std::vector<std::pair<int, int>> es;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (flip(rng)) es.push_back({i, j});
      return es;
    };
    const auto e1 = make_edges();
    const auto e2 = make_edges();
    CHECK(graphs_isomorphic(n, e1, n, e2) == permutation_isomorphic(n, e1, e2));
  }
}

TEST_CASE("body-labeled matching for coloring targets") {
  const auto fixed = fixed_classes(g12(), 4);
  const auto inst = encode_coloring(g12(), 4, candidates_from_fixed(g12(), 4, fixed));
  const auto sols = enumerate_exhaustive(inst.data, inst.probes, inst.target);
  REQUIRE(sols.size() == 14);
  for (const auto& agg : sols) CHECK(is_true_solution(agg, inst.target));

  // relabeling one body breaks the labeled match even though topology holds
  CanonicalAggregation twisted = *sols.begin();
  for (auto& body : twisted.bodies)
    if (body == 12) body = 13;
  for (auto& b : twisted.bonds) {
    if (b.body_a == 12) b.body_a = 13;
    if (b.body_b == 12) b.body_b = 13;
  }
  CHECK_FALSE(is_true_solution(twisted, inst.target));
}

TEST_CASE("separate partitions theta") {
  const auto inst = encode_hamilton(fig9c());
  const auto sols = enumerate_exhaustive(inst.data, inst.probes, inst.target);
  std::vector<CanonicalAggregation> theta(sols.begin(), sols.end());
  // salt with residues: single data and a 2-aggregation
  CanonicalAggregation lone;
  lone.bodies = {1};
  theta.push_back(lone);
  theta.push_back(chain(2, false));
  const auto store = separate(theta, inst.target);
  CHECK(store.accepted.size() + store.residues.size() == theta.size());
  CHECK(store.accepted.size() == sols.size());
  CHECK(store.residues.size() == 2);

  SUBCASE("single 1-aggregation against a multi-vertex target") {
    const auto single = separate({lone}, inst.target);
    CHECK(single.accepted.empty());
    CHECK(single.residues.size() == 1);
  }
}

TEST_CASE("prefilter is implied by the isomorphism test") {
  std::mt19937_64 rng(99);
  const auto targets = cycles({3, 4, 5});
  std::uniform_int_distribution<int> size(1, 6);
  std::bernoulli_distribution closed(0.5);
  for (int round = 0; round < 100; ++round) {
    const int n = size(rng);
    const auto agg = chain(n, closed(rng));
    if (is_true_solution(agg, targets)) CHECK(prefilter(agg, targets));
  }
}

TEST_CASE("recycle refunds residue data and reports per body") {
  DataLibrary lib;
  for (int body : {1, 2, 3}) {
    lib.types.push_back({body, body, "x" + std::to_string(body),
                         {{body, "a"}, {body, "b"}}, FiberUse::kPorts});
    lib.inventory[body] = 5;
  }
  SolutionStore store;
  store.residues.push_back(chain(3, false));
  auto refund = recycle(store, lib);
  CHECK(refund == std::map<int, long long>{{1, 1}, {2, 1}, {3, 1}});
  CHECK(lib.copies(1) == 6);
  CHECK(lib.copies(2) == 6);
  CHECK(lib.copies(3) == 6);

  SolutionStore empty;
  CHECK(recycle(empty, lib).empty());
}

TEST_CASE("recycling conserves data across a stochastic run") {
  auto inst = encode_hamilton(fig9c());
  for (auto& [body, copies] : inst.data.inventory) copies = 6;
  std::map<int, long long> load_counts;
  for (const auto& t : inst.data.types) load_counts[t.body] = 4;
  std::map<ProbeType, long long> probe_counts;
  for (const auto& p : inst.probes.probes) probe_counts[p] = 4;
  auto state = PlatformState::load(inst.data, inst.probes, load_counts, probe_counts,
                                   inst.target);
  // pools handed copies to the platform
  for (auto& [body, copies] : inst.data.inventory) copies -= 4;

  EngineConfig config;
  config.seed = 12345;
  const auto theta = state.run_stochastic(config);
  const auto store = separate(theta, inst.target);
  const auto refund = recycle(store, inst.data);

  long long refunded = 0;
  for (const auto& [body, count] : refund) refunded += count;
  long long in_q = 0;
  for (const auto& agg : store.accepted) in_q += agg.order();
  long long in_pools = 0;
  for (const auto& [body, copies] : inst.data.inventory) in_pools += copies;
  CHECK(refunded + in_q == 4LL * 17);      // everything loaded is accounted for
  CHECK(in_pools == 2LL * 17 + refunded);  // pools = what stayed + what came back
}
