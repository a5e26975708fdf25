#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "entwit/entropy.hpp"
#include "entwit/graph.hpp"
#include "entwit/partition.hpp"
#include "entwit/rational.hpp"
#include "entwit/sampler.hpp"
#include "entwit/witness.hpp"

namespace entwit {

using json = nlohmann::ordered_json;

// Rationals serialize as {"num", "den"}; components that overflow int64
// fall back to decimal strings so nothing silently loses precision.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json graph_to_json(const Graph& g);          // {"n":.., "edges":[[u,v],..]}
Graph graph_from_json(const json& j);

json partition_to_json(const Partition& p);  // {"blocks":[[..],..]}
Partition partition_from_json(const json& j);

json coloring_to_json(const Coloring& c);    // [[class0..],[class1..],..]
Coloring coloring_from_json(const json& j);

json bound_report_to_json(const BoundReport& rep);
json cm_bound_to_json(const CmBound& cm);
json verdict_to_json(const Witness& w, const WitnessVerdict& v);
json intactness_to_json(const IntactnessReport& rep);

// Raw outcomes pack shot-major, ceil(n/8) bytes per shot, bit q of a shot
// at byte q/8, bit q%8; then base64 over the whole stream.
std::string base64_encode(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> base64_decode(const std::string& text);
std::vector<uint8_t> pack_outcomes(const OutcomeBuffer& buf);
OutcomeBuffer unpack_outcomes(const std::vector<uint8_t>& bytes, int n, long long shots);

json record_to_json(const ExperimentRecord& rec, bool include_raw = true);
ExperimentRecord record_from_json(const json& j);

// CSV: "setting,shot,outcome" with the outcome bitstring qubit-0 first.
std::string record_to_csv(const ExperimentRecord& rec);

// Structural check of a JSON document against the subset of JSON Schema
// the shipped schemas use (type/properties/required/items). Returns an
// empty string on success, else the first violation.
std::string validate_against_schema(const json& doc, const json& schema);

}  // namespace entwit
