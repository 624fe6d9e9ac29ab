#pragma once
// JSON / DOT serialization for instances, aggregations and traces.

#include <iosfwd>
#include <string>
#include <vector>

#include "pm/aggregation.hpp"
#include "pm/detector.hpp"
#include "pm/library.hpp"

namespace pm {

// Instance document:
// {"data_types":[{"body","group","name","fiber_use","fibers":[tag..],"copies"}],
//  "probes":[{"kind","a":[body,tag],"b":[body,tag],"copies"}]}
// group/name/fiber_use are optional on input.
std::string instance_to_json(const DataLibrary& data, const ProbeLibrary& probes,
                             bool pretty = true);
void instance_from_json(const std::string& text, DataLibrary& data, ProbeLibrary& probes);

// Aggregation array: [{"members":[{"body","instance"}],
//                      "bonds":[[body,fiber,body,fiber]..]}]
// Exhaustive results carry instance = body.
std::string aggregations_to_json(const std::vector<CanonicalAggregation>& aggs,
                                 bool pretty = true);

std::string aggregation_to_dot(const CanonicalAggregation& agg, const DataLibrary& data,
                               const std::string& graph_name);
std::string aggregations_to_dot(const std::vector<CanonicalAggregation>& aggs,
                                const DataLibrary& data);

}  // namespace pm
