#include <random>

#include "doctest.h"
#include "pm/encoders.hpp"
#include "pm/oracles.hpp"
#include "pm/platform.hpp"
#include "pm/solve.hpp"
#include "test_util.hpp"

using namespace pm;
using namespace pm::testutil;

TEST_CASE("minimum vertex cover") {
  CHECK(min_vertex_cover(InputGraph(2, {{1, 2}})).cover == std::vector<int>{1});
  CHECK(min_vertex_cover(cycle_graph(4)).cover.size() == 2);
  CHECK(min_vertex_cover(cycle_graph(4)).cover == std::vector<int>{1, 3});
  CHECK(min_vertex_cover(fig9c()).cover == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(min_vertex_cover(InputGraph(3, {})).cover.empty());

  SUBCASE("brute force agreement on random graphs") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 30; ++round) {
      const auto g = random_graph(rng, 8, 0.4);
      const auto result = min_vertex_cover(g);
      CHECK(result.exact);
      // exhaustive check: no smaller subset covers, this one covers
      auto covers = [&](unsigned long mask) {
        for (auto [u, v] : g.edges())
          if (!(mask >> (u - 1) & 1) && !(mask >> (v - 1) & 1)) return false;
        return true;
      };
      size_t best = g.vertex_count();
      for (unsigned long mask = 0; mask < (1UL << g.vertex_count()); ++mask)
        if (covers(mask)) best = std::min<size_t>(best, __builtin_popcountl(mask));
      unsigned long got = 0;
      for (int v : result.cover) got |= 1UL << (v - 1);
      CHECK(covers(got));
      CHECK(result.cover.size() == best);
    }
  }

  SUBCASE("greedy fallback above the exact limit") {
    const auto result = min_vertex_cover(path_graph(6), 4);
    CHECK_FALSE(result.exact);
    std::set<int> in(result.cover.begin(), result.cover.end());
    for (auto [u, v] : path_graph(6).edges()) CHECK((in.count(u) || in.count(v)));
  }
}

TEST_CASE("hamilton encoding of the worked example") {
  const auto inst = encode_hamilton(fig9c());
  CHECK(inst.cover == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(inst.data.type_count() == 17);
  CHECK(inst.data.total_fiber_count() == 34);
  CHECK(inst.probes.type_count() == 47);

  SUBCASE("sub-library sizes match the published counts") {
    const std::map<std::pair<int, int>, size_t> expected{
        {{1, 2}, 4}, {{1, 3}, 3}, {{1, 4}, 13}, {{1, 5}, 10}, {{2, 3}, 1},
        {{2, 4}, 3}, {{2, 5}, 0}, {{3, 4}, 4},  {{3, 5}, 2},  {{4, 5}, 7}};
    for (const auto& [pair, size] : expected)
      CHECK(sublibrary(inst.probes, inst.data, pair.first, pair.second).size() == size);
  }

  SUBCASE("acceptance targets are the 4- and 5-cycles") {
    REQUIRE(inst.target.targets.size() == 2);
    CHECK(inst.target.targets[0].order == 4);
    CHECK(inst.target.targets[1].order == 5);
    CHECK(inst.target.threshold() == 5);
  }

  SUBCASE("every datum is a 2-path with endpoints in the neighborhood") {
    for (const auto& [body, d] : inst.datum_of) {
      CHECK(d.l < d.j);
      CHECK(inst.graph.has_edge(d.center, d.l));
      CHECK(inst.graph.has_edge(d.center, d.j));
    }
  }
}

TEST_CASE("hamilton encoding edge cases") {
  CHECK_THROWS_WITH_AS(encode_hamilton(complete_graph(3)),
                       doctest::Contains("GraphTooSmall"), EncodeError);

  SUBCASE("cover vertex of degree one") {
    // pendant vertex 1 forced into every cover of its edge
    InputGraph g(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_THROWS_WITH_AS(encode_hamilton(g, std::vector<int>{1, 3, 4}),
                         doctest::Contains("NoTwoPaths"), EncodeError);
  }
  SUBCASE("supplied cover must cover") {
    CHECK_THROWS_WITH_AS(encode_hamilton(fig9c(), std::vector<int>{1, 2, 3}),
                         doctest::Contains("CoverInvalid"), EncodeError);
  }
}

TEST_CASE("five-cycle instance has a unique solution decoding to itself") {
  const auto g = cycle_graph(5);
  const auto inst = encode_hamilton(g);
  CHECK(inst.data.type_count() == 3);
  const auto sols = enumerate_exhaustive(inst.data, inst.probes, inst.target);
  REQUIRE(sols.size() == 1);
  const auto decoded = decode_hamilton(*sols.begin(), inst);
  REQUIRE(decoded.status == DecodeStatus::kOk);
  CHECK(decoded.cycle == CanonicalCycle{1, 2, 3, 4, 5});
  CHECK(brute_hamilton(g) == std::set<CanonicalCycle>{{1, 2, 3, 4, 5}});
}

TEST_CASE("hamilton decode failure modes") {
  const auto inst = encode_hamilton(fig9c());

  SUBCASE("a 2-aggregation is not spanning") {
    CanonicalAggregation small;
    small.bodies = {7, 8};  // x268, x358
    small.bonds = {make_canonical_bond(7, "8", 8, "8", ProbeKind::kConnective)};
    CHECK(decode_hamilton(small, inst).status == DecodeStatus::kNotSpanning);
  }
  SUBCASE("unknown body means the edges cannot be expanded") {
    CanonicalAggregation foreign;
    foreign.bodies = {99};
    CHECK(decode_hamilton(foreign, inst).status == DecodeStatus::kEdgeNotInGraph);
  }
  SUBCASE("spanning union that is not a single cycle") {
    // all six center-1 data cover every vertex but pile degree onto vertex 1
    CanonicalAggregation blob;
    for (const auto& [body, d] : inst.datum_of)
      if (d.center == 1 || d.center == 4) blob.bodies.push_back(body);
    std::sort(blob.bodies.begin(), blob.bodies.end());
    CHECK(decode_hamilton(blob, inst).status == DecodeStatus::kNotACycle);
  }
}

TEST_CASE("fixed classes") {
  SUBCASE("worked example") {
    const auto fixed = fixed_classes(g12(), 4);
    CHECK(fixed.vertices == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(fixed.coloring_orbits == 14);
    CHECK(fixed.color.at(1) == "r");
    CHECK(fixed.color.at(2) == "y");
    CHECK(fixed.color.at(3) == "b");
    CHECK(fixed.color.at(4) == "g");
    CHECK(fixed.color.at(5) == "r");  // 1 and 5 share a class in every coloring
  }
  SUBCASE("complete graph: unique coloring up to permutation") {
    const auto fixed = fixed_classes(complete_graph(4), 4);
    CHECK(fixed.vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(fixed.coloring_orbits == 1);
  }
  SUBCASE("five-cycle with three colors has no fixed classes") {
    const auto fixed = fixed_classes(cycle_graph(5), 3);
    CHECK(fixed.vertices.empty());
  }
  SUBCASE("uncolorable") {
    CHECK_THROWS_WITH_AS(fixed_classes(complete_graph(4), 3), doctest::Contains("Uncolorable"),
                         EncodeError);
  }
}

TEST_CASE("coloring encoding of the worked example") {
  const auto fixed = fixed_classes(g12(), 4);
  const auto table = candidates_from_fixed(g12(), 4, fixed);

  SUBCASE("candidate table matches the published columns") {
    const std::map<int, std::vector<std::string>> expected{
        {1, {"r"}},          {2, {"y"}},           {3, {"b"}},      {4, {"g"}},
        {5, {"r"}},          {6, {"r", "b"}},      {7, {"b", "g"}}, {8, {"y", "b", "g"}},
        {9, {"y", "b", "g"}}, {10, {"y", "g"}},    {11, {"r", "y"}}, {12, {"y", "b"}}};
    CHECK(table.candidates == expected);
  }

  const auto inst = encode_coloring(g12(), 4, table);
  CHECK(inst.data.total_fiber_count() == 21);
  CHECK(inst.probes.type_count() == 73);

  SUBCASE("30 non-empty sub-libraries, one per edge") {
    int nonempty = 0;
    for (int u = 1; u <= 12; ++u)
      for (int v = u + 1; v <= 12; ++v)
        if (!sublibrary(inst.probes, inst.data, u, v).empty()) ++nonempty;
    CHECK(nonempty == 30);
  }

  SUBCASE("exhaustive solve finds the 14 colorings") {
    const auto sols = enumerate_exhaustive(inst.data, inst.probes, inst.target);
    CHECK(sols.size() == 14);
    std::set<std::vector<int>> decoded;
    for (const auto& agg : sols) {
      const auto coloring = decode_coloring(agg, inst);
      REQUIRE(coloring.status == DecodeStatus::kOk);
      std::vector<int> flat;
      for (const auto& [v, c] : coloring.color) {
        const auto& pal = table.palette;
        flat.push_back(static_cast<int>(std::find(pal.begin(), pal.end(), c) - pal.begin()));
      }
      decoded.insert(flat);
    }
    std::map<int, int> oracle_fixed{{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 0}};
    CHECK(decoded == brute_coloring(g12(), 4, oracle_fixed));
  }
}

TEST_CASE("triangle with all vertices fixed") {
  const auto fixed = fixed_classes(complete_graph(3), 3);
  CHECK(fixed.vertices == std::vector<int>{1, 2, 3});
  const auto inst = encode_coloring(complete_graph(3), 3,
                                    candidates_from_fixed(complete_graph(3), 3, fixed));
  CHECK(inst.probes.type_count() == 3);
  CHECK(enumerate_exhaustive(inst.data, inst.probes, inst.target).size() == 1);
}

TEST_CASE("coloring encoding edge cases") {
  SUBCASE("empty candidate set") {
    auto table = full_candidates(complete_graph(3), 3);
    table.candidates[2].clear();
    CHECK_THROWS_WITH_AS(encode_coloring(complete_graph(3), 3, table),
                         doctest::Contains("EmptyCandidateSet"), EncodeError);
  }
  SUBCASE("disconnected graphs cannot be encoded") {
    InputGraph g(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(encode_coloring(g, 3, full_candidates(g, 3)), EncodeError);
  }
}

TEST_CASE("decode_coloring rejects adjacent same-color data") {
  const auto g = complete_graph(3);
  const auto inst = encode_coloring(g, 3, full_candidates(g, 3));
  CanonicalAggregation bad;
  bad.bodies = {1, 2, 3};
  bad.bonds = {make_canonical_bond(1, "r", 2, "r", ProbeKind::kConnective),
               make_canonical_bond(2, "r", 3, "y", ProbeKind::kConnective),
               make_canonical_bond(1, "r", 3, "y", ProbeKind::kConnective)};
  std::sort(bad.bonds.begin(), bad.bonds.end());
  CHECK(decode_coloring(bad, inst).status == DecodeStatus::kImproperColoring);
}

TEST_CASE("hamilton round trip on random connected graphs") {
  std::mt19937_64 rng(777);
  for (int round = 0; round < 12; ++round) {
    const int n = std::uniform_int_distribution<int>(5, 8)(rng);
    const auto g = random_connected_graph(rng, n, 0.45);
    const auto want = brute_hamilton(g);
    HamiltonInstance inst;
    try {
      inst = encode_hamilton(g);
    } catch (const EncodeError&) {
      CHECK(want.empty());  // infeasible encodings can only happen without cycles
      continue;
    }
    const auto result = solve_hamilton(inst, {.mode = RunMode::kExhaustive});
    CHECK(result.cycles == want);
  }
}

TEST_CASE("coloring round trip on random connected graphs") {
  std::mt19937_64 rng(778);
  for (int round = 0; round < 8; ++round) {
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    const int k = std::uniform_int_distribution<int>(3, 4)(rng);
    const auto g = random_connected_graph(rng, n, 0.5);
    FixedClasses fixed;
    try {
      fixed = fixed_classes(g, k);
    } catch (const EncodeError&) {
      CHECK(brute_coloring(g, k).empty());
      continue;
    }
    const auto table = candidates_from_fixed(g, k, fixed);
    const auto inst = encode_coloring(g, k, table);
    const auto result = solve_coloring(inst, {.mode = RunMode::kExhaustive});
    std::map<int, int> oracle_fixed;
    for (int v : fixed.vertices) {
      const auto& pal = table.palette;
      oracle_fixed[v] = static_cast<int>(
          std::find(pal.begin(), pal.end(), fixed.color.at(v)) - pal.begin());
    }
    const auto want = brute_coloring(g, k, oracle_fixed);
    std::set<std::vector<int>> got;
    for (const auto& coloring : result.colorings) {
      std::vector<int> flat;
      for (const auto& [v, c] : coloring) {
        const auto& pal = table.palette;
        flat.push_back(static_cast<int>(std::find(pal.begin(), pal.end(), c) - pal.begin()));
      }
      got.insert(flat);
    }
    CHECK(got == want);
  }
}
