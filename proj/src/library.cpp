#include "pm/library.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pm {

std::string to_string(const FiberRef& f) {
  return "x" + std::to_string(f.body) + "^" + f.tag;
}

bool DataType::has_fiber(const std::string& tag) const {
  for (const auto& f : fibers)
    if (f.tag == tag && f.body == body) return true;
  return false;
}

const DataType* DataLibrary::find(int body) const {
  for (const auto& t : types)
    if (t.body == body) return &t;
  return nullptr;
}

const DataType* DataLibrary::find_by_group_fiber(int group, const std::string& tag) const {
  for (const auto& t : types)
    if (t.group == group && t.has_fiber(tag)) return &t;
  return nullptr;
}

long long DataLibrary::copies(int body) const {
  auto it = inventory.find(body);
  return it == inventory.end() ? 0 : it->second;
}

long long DataLibrary::total_fiber_count() const {
  long long p = 0;
  for (const auto& t : types) p += static_cast<long long>(t.fibers.size());
  return p;
}

std::vector<int> DataLibrary::column_heights() const {
  std::vector<int> heights;
  heights.reserve(types.size());
  for (const auto& t : types) heights.push_back(static_cast<int>(t.fibers.size()));
  return heights;
}

std::vector<int> DataLibrary::groups() const {
  std::set<int> gs;
  for (const auto& t : types) gs.insert(t.group);
  return {gs.begin(), gs.end()};
}

long long DataLibrary::group_fiber_count(int group) const {
  long long p = 0;
  for (const auto& t : types)
    if (t.group == group) p += static_cast<long long>(t.fibers.size());
  return p;
}

ProbeType ProbeType::normalized() const {
  ProbeType out = *this;
  if (kind == ProbeKind::kConnective && out.b < out.a) std::swap(out.a, out.b);
  return out;
}

std::string to_string(const ProbeType& p) {
  const char* mid = p.kind == ProbeKind::kConnective ? " -- " : " -> ";
  return to_string(p.a) + mid + to_string(p.b);
}

ProbeType make_connective(FiberRef a, FiberRef b) {
  return ProbeType{ProbeKind::kConnective, std::move(a), std::move(b)}.normalized();
}

ProbeType make_transitive(FiberRef source, FiberRef destination) {
  return ProbeType{ProbeKind::kTransitive, std::move(source), std::move(destination)};
}

void ProbeLibrary::add(const ProbeType& probe, long long copies) {
  ProbeType p = probe.normalized();
  auto it = inventory.find(p);
  if (it == inventory.end()) {
    probes.push_back(p);
    std::sort(probes.begin(), probes.end());
    inventory[p] = copies;
  } else if (it->second != kUnbounded) {
    it->second = copies == kUnbounded ? kUnbounded : it->second + copies;
  }
}

bool ProbeLibrary::contains(const ProbeType& probe) const {
  return inventory.count(probe.normalized()) > 0;
}

long long ProbeLibrary::copies(const ProbeType& probe) const {
  auto it = inventory.find(probe.normalized());
  return it == inventory.end() ? 0 : it->second;
}

std::string to_string(Issue issue) {
  switch (issue) {
    case Issue::kDuplicateBody: return "DuplicateBody";
    case Issue::kEmptyFiberSet: return "EmptyFiberSet";
    case Issue::kForeignFiber: return "ForeignFiber";
    case Issue::kDuplicateFiberTag: return "DuplicateFiberTag";
    case Issue::kIntraDataProbe: return "IntraDataProbe";
    case Issue::kUnknownFiber: return "UnknownFiber";
    case Issue::kBoundExceeded: return "BoundExceeded";
    case Issue::kKindMismatch: return "KindMismatch";
  }
  return "?";
}

bool LibraryReport::has(Issue code) const {
  for (const auto& i : issues)
    if (i.code == code) return true;
  return false;
}

LibraryReport validate_data_library(const DataLibrary& lib) {
  LibraryReport report;
  std::set<int> bodies;
  for (const auto& t : lib.types) {
    if (!bodies.insert(t.body).second)
      report.issues.push_back({Issue::kDuplicateBody, "body " + std::to_string(t.body)});
    if (t.fibers.empty())
      report.issues.push_back({Issue::kEmptyFiberSet, "body " + std::to_string(t.body)});
    std::set<std::string> tags;
    for (const auto& f : t.fibers) {
      if (f.body != t.body)
        report.issues.push_back(
            {Issue::kForeignFiber, to_string(f) + " inside body " + std::to_string(t.body)});
      if (!tags.insert(f.tag).second)
        report.issues.push_back({Issue::kDuplicateFiberTag,
                                 "tag " + f.tag + " repeated in body " + std::to_string(t.body)});
    }
  }
  report.ok = report.issues.empty();
  report.type_count = lib.type_count();
  report.fiber_count = lib.total_fiber_count();
  report.column_heights = lib.column_heights();
  for (const auto& t : lib.types) {
    std::vector<std::string> column;
    column.reserve(t.fibers.size());
    for (const auto& f : t.fibers) column.push_back(to_string(f));
    report.matrix.push_back(std::move(column));
  }
  return report;
}

long long max_probe_count(const DataLibrary& lib, ProbeKind kind) {
  const long long p = lib.total_fiber_count();
  long long sum_sq = 0;
  for (int h : lib.column_heights()) sum_sq += static_cast<long long>(h) * h;
  const long long arcs = p * p - sum_sq;
  return kind == ProbeKind::kConnective ? arcs / 2 : arcs;
}

LibraryReport validate_probe_library(const DataLibrary& data, const ProbeLibrary& probes) {
  LibraryReport report;
  for (const auto& probe : probes.probes) {
    if (probe.kind != probes.kind)
      report.issues.push_back({Issue::kKindMismatch, to_string(probe)});
    if (probe.a.body == probe.b.body) {
      report.issues.push_back({Issue::kIntraDataProbe, to_string(probe)});
      continue;
    }
    for (const FiberRef* f : {&probe.a, &probe.b}) {
      const DataType* t = data.find(f->body);
      if (t == nullptr || !t->has_fiber(f->tag))
        report.issues.push_back({Issue::kUnknownFiber, to_string(*f)});
    }
  }
  const long long bound = max_probe_count(data, probes.kind);
  if (probes.type_count() > bound)
    report.issues.push_back({Issue::kBoundExceeded, std::to_string(probes.type_count()) +
                                                        " > " + std::to_string(bound)});
  report.ok = report.issues.empty();
  report.probe_count = probes.type_count();
  report.bound = bound;
  return report;
}

std::vector<ProbeType> sublibrary(const ProbeLibrary& probes, const DataLibrary& data,
                                  int group_i, int group_t) {
  if (group_i == group_t)
    throw std::invalid_argument("sublibrary: identical group labels (" +
                                std::to_string(group_i) + ")");
  std::map<int, int> group_of;
  for (const auto& t : data.types) group_of[t.body] = t.group;
  std::vector<ProbeType> out;
  for (const auto& probe : probes.probes) {
    auto ga = group_of.find(probe.a.body);
    auto gb = group_of.find(probe.b.body);
    if (ga == group_of.end() || gb == group_of.end()) continue;
    const bool forward = ga->second == group_i && gb->second == group_t;
    const bool backward = ga->second == group_t && gb->second == group_i;
    if (forward || (probes.kind == ProbeKind::kConnective && backward)) out.push_back(probe);
  }
  return out;
}

long long sublibrary_capacity(const DataLibrary& data, ProbeKind kind, int group_i,
                              int group_t) {
  if (group_i == group_t)
    throw std::invalid_argument("sublibrary_capacity: identical group labels");
  const long long cap = data.group_fiber_count(group_i) * data.group_fiber_count(group_t);
  return kind == ProbeKind::kConnective ? cap : 2 * cap;
}

}  // namespace pm
