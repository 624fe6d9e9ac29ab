#include "pm/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace pm {

using nlohmann::json;

namespace {

json fiber_ref_json(const FiberRef& f) { return json::array({f.body, f.tag}); }

FiberRef fiber_ref_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error("instance JSON: fiber refs are [body, tag] pairs");
  FiberRef f;
  f.body = j[0].get<int>();
  f.tag = j[1].is_string() ? j[1].get<std::string>() : std::to_string(j[1].get<long long>());
  return f;
}

}  // namespace

std::string instance_to_json(const DataLibrary& data, const ProbeLibrary& probes, bool pretty) {
  json doc;
  auto& types = doc["data_types"] = json::array();
  for (const auto& t : data.types) {
    json jt;
    jt["body"] = t.body;
    if (t.group != t.body) jt["group"] = t.group;
    if (!t.name.empty()) jt["name"] = t.name;
    if (t.fiber_use == FiberUse::kExclusive) jt["fiber_use"] = "exclusive";
    auto& fibers = jt["fibers"] = json::array();
    for (const auto& f : t.fibers) fibers.push_back(f.tag);
    jt["copies"] = data.copies(t.body);
    types.push_back(std::move(jt));
  }
  auto& plist = doc["probes"] = json::array();
  for (const auto& p : probes.probes) {
    json jp;
    jp["kind"] = p.kind == ProbeKind::kConnective ? "connective" : "transitive";
    jp["a"] = fiber_ref_json(p.a);
    jp["b"] = fiber_ref_json(p.b);
    jp["copies"] = probes.copies(p);
    plist.push_back(std::move(jp));
  }
  return pretty ? doc.dump(2) : doc.dump();
}

void instance_from_json(const std::string& text, DataLibrary& data, ProbeLibrary& probes) {
  json doc = json::parse(text);
  data = DataLibrary{};
  probes = ProbeLibrary{};
  if (!doc.contains("data_types") || !doc.contains("probes"))
    throw std::runtime_error("instance JSON requires data_types and probes");
  for (const auto& jt : doc["data_types"]) {
    DataType t;
    t.body = jt.at("body").get<int>();
    t.group = jt.value("group", t.body);
    t.name = jt.value("name", "x" + std::to_string(t.body));
    t.fiber_use = jt.value("fiber_use", std::string("ports")) == "exclusive"
                      ? FiberUse::kExclusive
                      : FiberUse::kPorts;
    for (const auto& jf : jt.at("fibers")) {
      const std::string tag =
          jf.is_string() ? jf.get<std::string>() : std::to_string(jf.get<long long>());
      t.fibers.push_back({t.body, tag});
    }
    data.inventory[t.body] = jt.value("copies", kUnbounded);
    data.types.push_back(std::move(t));
  }
  bool any_transitive = false;
  for (const auto& jp : doc["probes"]) {
    const std::string kind = jp.at("kind").get<std::string>();
    ProbeType p;
    p.kind = kind == "transitive" ? ProbeKind::kTransitive : ProbeKind::kConnective;
    any_transitive |= p.kind == ProbeKind::kTransitive;
    p.a = fiber_ref_from(jp.at("a"));
    p.b = fiber_ref_from(jp.at("b"));
    probes.add(p, jp.value("copies", kUnbounded));
  }
  probes.kind = any_transitive ? ProbeKind::kTransitive : ProbeKind::kConnective;
}

std::string aggregations_to_json(const std::vector<CanonicalAggregation>& aggs, bool pretty) {
  json out = json::array();
  for (const auto& agg : aggs) {
    json ja;
    auto& members = ja["members"] = json::array();
    for (int body : agg.bodies) members.push_back({{"body", body}, {"instance", body}});
    auto& bonds = ja["bonds"] = json::array();
    for (const auto& b : agg.bonds)
      bonds.push_back(json::array({b.body_a, b.tag_a, b.body_b, b.tag_b}));
    out.push_back(std::move(ja));
  }
  return pretty ? out.dump(2) : out.dump();
}

std::string aggregation_to_dot(const CanonicalAggregation& agg, const DataLibrary& data,
                               const std::string& graph_name) {
  std::ostringstream out;
  out << "graph " << graph_name << " {\n";
  for (int body : agg.bodies) {
    const DataType* t = data.find(body);
    const std::string label = t != nullptr && !t->name.empty() ? t->name : std::to_string(body);
    out << "  n" << body << " [label=\"" << label << "\"];\n";
  }
  for (const auto& b : agg.bonds) {
    out << "  n" << b.body_a << " -- n" << b.body_b << " [label=\"" << b.tag_a << ":" << b.tag_b
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string aggregations_to_dot(const std::vector<CanonicalAggregation>& aggs,
                                const DataLibrary& data) {
  std::ostringstream out;
  for (size_t i = 0; i < aggs.size(); ++i)
    out << aggregation_to_dot(aggs[i], data, "solution_" + std::to_string(i));
  return out.str();
}

}  // namespace pm
