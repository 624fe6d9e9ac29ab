#pragma once
// Data and probe libraries: the two core stores of a probe machine.
//
// A DataType is a body (integer id) plus an ordered set of typed fibers.
// A ProbeType pairs two fibers of distinct data; connective probes are
// unordered, transitive probes are ordered source->destination.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pm {

inline constexpr long long kUnbounded = -1;  // inventory sentinel

enum class ProbeKind { kConnective, kTransitive };

// How the fibers of one data instance may host bonds.
//   kPorts:     every fiber tag is a physical port, at most one bond each.
//   kExclusive: the fiber tags are mutually exclusive alternatives; all bonds
//               of an instance must use a single tag (any number of them).
enum class FiberUse { kPorts, kExclusive };

// A fiber type: (owner body, tag). Tags are arbitrary labels, unique per owner.
struct FiberRef {
  int body = 0;
  std::string tag;

  auto operator<=>(const FiberRef&) const = default;
};

std::string to_string(const FiberRef& f);  // "x<body>^<tag>"

struct DataType {
  int body = 0;
  int group = 0;  // sub-library grouping label; defaults to body
  std::string name;
  std::vector<FiberRef> fibers;  // normally all owned by `body`
  FiberUse fiber_use = FiberUse::kPorts;

  bool has_fiber(const std::string& tag) const;
};

struct DataLibrary {
  std::vector<DataType> types;
  std::map<int, long long> inventory;  // body -> copies, kUnbounded allowed

  const DataType* find(int body) const;
  const DataType* find_by_group_fiber(int group, const std::string& tag) const;
  long long copies(int body) const;

  int type_count() const { return static_cast<int>(types.size()); }
  long long total_fiber_count() const;                  // p = sum of p_i
  std::vector<int> column_heights() const;              // (p_1 .. p_n)
  std::vector<int> groups() const;                      // distinct group ids
  long long group_fiber_count(int group) const;
};

struct ProbeType {
  ProbeKind kind = ProbeKind::kConnective;
  FiberRef a;
  FiberRef b;  // ordered a -> b iff transitive

  // Connective probes compare equal under endpoint swap.
  ProbeType normalized() const;
  auto operator<=>(const ProbeType&) const = default;
};

std::string to_string(const ProbeType& p);

ProbeType make_connective(FiberRef a, FiberRef b);
ProbeType make_transitive(FiberRef source, FiberRef destination);

struct ProbeLibrary {
  ProbeKind kind = ProbeKind::kConnective;
  std::vector<ProbeType> probes;            // normalized, unique
  std::map<ProbeType, long long> inventory; // probe -> copies

  // Idempotent at the type level; copies accumulate in the inventory.
  void add(const ProbeType& probe, long long copies = kUnbounded);
  bool contains(const ProbeType& probe) const;
  long long copies(const ProbeType& probe) const;
  int type_count() const { return static_cast<int>(probes.size()); }
};

// ---- validation ----

enum class Issue {
  kDuplicateBody,
  kEmptyFiberSet,
  kForeignFiber,
  kDuplicateFiberTag,
  kIntraDataProbe,
  kUnknownFiber,
  kBoundExceeded,
  kKindMismatch,
};

std::string to_string(Issue issue);

struct ValidationIssue {
  Issue code;
  std::string detail;
};

struct LibraryReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;

  // filled by validate_data_library
  int type_count = 0;                           // n
  long long fiber_count = 0;                    // p
  std::vector<int> column_heights;              // p_1..p_n
  std::vector<std::vector<std::string>> matrix; // column i = fiber names of type i

  // filled by validate_probe_library
  int probe_count = 0;
  long long bound = 0;

  bool has(Issue code) const;
};

LibraryReport validate_data_library(const DataLibrary& lib);

// Eq. bound on probe-type counts: 1/2 (p^2 - sum p_i^2) connective,
// p^2 - sum p_i^2 transitive.
long long max_probe_count(const DataLibrary& lib, ProbeKind kind);

LibraryReport validate_probe_library(const DataLibrary& data, const ProbeLibrary& probes);

// The (i,t)-complete probe sub-library, indexed by group label.
// Throws std::invalid_argument when i == t.
std::vector<ProbeType> sublibrary(const ProbeLibrary& probes, const DataLibrary& data,
                                  int group_i, int group_t);

// Capacity of the (i,t) sub-library: P_i * P_t (x2 for transitive), with P_g
// the fiber count of group g.
long long sublibrary_capacity(const DataLibrary& data, ProbeKind kind, int group_i,
                              int group_t);

}  // namespace pm
