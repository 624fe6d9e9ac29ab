#include <random>

#include "doctest.h"
#include "pm/encoders.hpp"
#include "pm/library.hpp"
#include "test_util.hpp"

using namespace pm;
using namespace pm::testutil;

TEST_CASE("data library validation on the 8-vertex worked example") {
  const auto inst = encode_hamilton(fig9c());
  const auto report = validate_data_library(inst.data);
  CHECK(report.ok);
  CHECK(report.type_count == 17);
  CHECK(report.fiber_count == 34);
  for (int h : report.column_heights) CHECK(h == 2);
  CHECK(report.matrix.size() == 17);
}

TEST_CASE("data library validation, minimal and broken libraries") {
  DataLibrary lib;
  lib.types.push_back({1, 1, "x1", {{1, "1"}}, FiberUse::kPorts});
  lib.inventory[1] = kUnbounded;
  auto report = validate_data_library(lib);
  CHECK(report.ok);
  CHECK(report.type_count == 1);
  CHECK(report.fiber_count == 1);
  CHECK(report.matrix == std::vector<std::vector<std::string>>{{"x1^1"}});

  SUBCASE("duplicate body") {
    lib.types.push_back({1, 1, "dup", {{1, "2"}}, FiberUse::kPorts});
    report = validate_data_library(lib);
    CHECK_FALSE(report.ok);
    CHECK(report.has(Issue::kDuplicateBody));
  }
  SUBCASE("empty fiber set") {
    lib.types.push_back({2, 2, "x2", {}, FiberUse::kPorts});
    report = validate_data_library(lib);
    CHECK_FALSE(report.ok);
    CHECK(report.has(Issue::kEmptyFiberSet));
  }
  SUBCASE("foreign fiber") {
    lib.types.push_back({2, 2, "x2", {{1, "1"}}, FiberUse::kPorts});
    report = validate_data_library(lib);
    CHECK_FALSE(report.ok);
    CHECK(report.has(Issue::kForeignFiber));
  }
}

TEST_CASE("coloring worked example library shape") {
  const auto fixed = fixed_classes(g12(), 4);
  const auto table = candidates_from_fixed(g12(), 4, fixed);
  const auto inst = encode_coloring(g12(), 4, table);
  const auto report = validate_data_library(inst.data);
  CHECK(report.ok);
  CHECK(report.type_count == 12);
  CHECK(report.fiber_count == 21);
  CHECK(report.column_heights == std::vector<int>{1, 1, 1, 1, 1, 2, 2, 3, 3, 2, 2, 2});
}

TEST_CASE("max probe count formulas") {
  DataLibrary two;
  two.types.push_back({1, 1, "x1", {{1, "1"}}, FiberUse::kPorts});
  two.types.push_back({2, 2, "x2", {{2, "1"}}, FiberUse::kPorts});
  CHECK(max_probe_count(two, ProbeKind::kConnective) == 1);
  CHECK(max_probe_count(two, ProbeKind::kTransitive) == 2);

  const auto inst = encode_hamilton(fig9c());
  CHECK(max_probe_count(inst.data, ProbeKind::kConnective) == 544);
  CHECK(max_probe_count(inst.data, ProbeKind::kTransitive) == 1088);
}

TEST_CASE("probe library validation") {
  const auto inst = encode_hamilton(fig9c());
  auto report = validate_probe_library(inst.data, inst.probes);
  CHECK(report.ok);
  CHECK(report.probe_count == 47);
  CHECK(report.bound == 544);

  SUBCASE("intra-data probe is rejected") {
    ProbeLibrary bad = inst.probes;
    bad.add(make_connective({1, "4"}, {1, "6"}));
    report = validate_probe_library(inst.data, bad);
    CHECK_FALSE(report.ok);
    CHECK(report.has(Issue::kIntraDataProbe));
  }
  SUBCASE("unknown fiber is rejected") {
    ProbeLibrary bad = inst.probes;
    bad.add(make_connective({1, "9"}, {7, "8"}));
    report = validate_probe_library(inst.data, bad);
    CHECK_FALSE(report.ok);
    CHECK(report.has(Issue::kUnknownFiber));
  }
}

TEST_CASE("coloring probe set is valid with 73 types") {
  const auto fixed = fixed_classes(g12(), 4);
  const auto inst = encode_coloring(g12(), 4, candidates_from_fixed(g12(), 4, fixed));
  const auto report = validate_probe_library(inst.data, inst.probes);
  CHECK(report.ok);
  CHECK(report.probe_count == 73);
}

TEST_CASE("sub-libraries of the worked example") {
  const auto inst = encode_hamilton(fig9c());

  SUBCASE("(2,3) holds the single probe joining x268 and x358 on fiber 8") {
    const auto y23 = sublibrary(inst.probes, inst.data, 2, 3);
    REQUIRE(y23.size() == 1);
    const auto& p = y23.front();
    CHECK(inst.data.find(p.a.body)->name == "x268");
    CHECK(inst.data.find(p.b.body)->name == "x358");
    CHECK(p.a.tag == "8");
    CHECK(p.b.tag == "8");
  }
  SUBCASE("(1,4) holds 13 probes") {
    CHECK(sublibrary(inst.probes, inst.data, 1, 4).size() == 13);
  }
  SUBCASE("connective sub-libraries are symmetric") {
    for (int i = 1; i <= 5; ++i) {
      for (int t = 1; t <= 5; ++t) {
        if (i == t) continue;
        auto a = sublibrary(inst.probes, inst.data, i, t);
        auto b = sublibrary(inst.probes, inst.data, t, i);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }
    }
  }
  SUBCASE("same group label is rejected") {
    CHECK_THROWS_AS(sublibrary(inst.probes, inst.data, 2, 2), std::invalid_argument);
  }
  SUBCASE("cardinality stays within the capacity") {
    for (int i = 1; i <= 5; ++i)
      for (int t = i + 1; t <= 5; ++t)
        CHECK(static_cast<long long>(sublibrary(inst.probes, inst.data, i, t).size()) <=
              sublibrary_capacity(inst.data, ProbeKind::kConnective, i, t));
  }
}

TEST_CASE("probe equality: connective is swap invariant, transitive is not") {
  const FiberRef a{1, "2"}, b{3, "1"};
  CHECK(make_connective(a, b) == make_connective(b, a));
  CHECK(make_transitive(a, b) != make_transitive(b, a));
  CHECK(make_transitive(a, b).a == a);
}

TEST_CASE("randomized libraries respect the probe-count bounds") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 100; ++round) {
    const auto lib = random_library(rng);
    REQUIRE(validate_data_library(lib).ok);
    const ProbeKind kind = round % 2 == 0 ? ProbeKind::kConnective : ProbeKind::kTransitive;
    const auto probes = random_probes(rng, lib, kind, 64);
    const auto report = validate_probe_library(lib, probes);
    CHECK(report.ok);
    CHECK(report.probe_count <= report.bound);

    // sum of sub-library capacities over unordered pairs equals the bound
    long long total = 0;
    const auto groups = lib.groups();
    for (size_t i = 0; i < groups.size(); ++i)
      for (size_t j = i + 1; j < groups.size(); ++j)
        total += sublibrary_capacity(lib, kind, groups[i], groups[j]);
    CHECK(total == max_probe_count(lib, kind));

    // every probe appears in exactly one unordered sub-library
    long long seen = 0;
    for (size_t i = 0; i < groups.size(); ++i)
      for (size_t j = i + 1; j < groups.size(); ++j)
        seen += static_cast<long long>(sublibrary(probes, lib, groups[i], groups[j]).size());
    if (kind == ProbeKind::kConnective) CHECK(seen == probes.type_count());
  }
}

TEST_CASE("duplicate probe insertion is idempotent at the type level") {
  ProbeLibrary probes;
  probes.add(make_connective({1, "1"}, {2, "1"}), 3);
  probes.add(make_connective({2, "1"}, {1, "1"}), 4);
  CHECK(probes.type_count() == 1);
  CHECK(probes.copies(make_connective({1, "1"}, {2, "1"})) == 7);
}
