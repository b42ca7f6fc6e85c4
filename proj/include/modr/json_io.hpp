#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "modr/compare.hpp"
#include "modr/contact.hpp"
#include "modr/graph.hpp"
#include "modr/weighting.hpp"

namespace modr {

using Json = nlohmann::ordered_json;

// On-disk problem document:
// { contact: {legs:[{s, a:"p/q"}], d, g},
//   graph: {vertices:[{id,genus,degree,cone}], edges:[{id,source,target}],
//           legs:[{id,vertex,leg_index}]},
//   r, weighting?: {edge-id: int}, islope?: {edge-id: int} }
struct ProblemFile {
    ContactData contact;
    DecoratedGraph graph;
    Int r = 1;
    std::optional<std::map<std::string, Int>> weighting;
    std::optional<std::map<std::string, Int>> islope;
};

// Throws ArgumentError on malformed documents.
ProblemFile parse_problem(const std::string& text);
ProblemFile problem_from_json(const Json& doc);

Json problem_to_json(const ProblemFile& pf);

// "p/q" or plain integer
Rat parse_rational(const Json& value);
std::string format_rational(const Rat& q);

// residues keyed by edge id, in {0,...,r-1}
Json weighting_to_json(const ModRType& T);
ModRType problem_to_type(const ProblemFile& pf);  // requires a weighting field
ZhatType problem_to_zhat(const ProblemFile& pf);  // requires an islope field

Json report_to_json(const ValidationReport& rep);

}  // namespace modr
