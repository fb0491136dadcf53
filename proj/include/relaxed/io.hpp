#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relaxed/collapse.hpp"
#include "relaxed/hf.hpp"
#include "relaxed/pairing.hpp"
#include "relaxed/well_order.hpp"
#include "relaxed/zfc.hpp"

// Serialized forms of the kernel's values. Malformed documents raise
// ValidationError naming the offending field.
namespace relaxed::io {

using nlohmann::json;

// {"left": [...], "right": [...], "rel": [[bool, ...], ...]}, row = left index.
json to_json(const pairing::FinPairing& p);
pairing::FinPairing pairing_from_json(const json& j);

// Ordered list of labels, least first.
json to_json(const wo::FinWellOrder& w);
wo::FinWellOrder well_order_from_json(const json& j);

// {"a,b": "c", "": "a", ...}: keys are comma-joined sorted subsets.
wo::ChoiceTable choice_table_from_json(const json& j);
json to_json(const wo::ChoiceTable& t);

// {"A": [...], "B": [...], "f": {"a": "b", ...}, "g": {"b": "a", ...}}
std::pair<pairing::FinMap, pairing::FinMap> injections_from_json(const json& j);
json to_json(const pairing::FinMap& m);

// Graph documents use the pairing layout with left == right.
wf::WFGraph graph_from_json(const json& j);

// name -> {"code": "<decimal>", "braces": "{...}"}; braces omitted above
// `braces_bit_limit` significant bits.
json collapse_to_json(const wf::WFGraph& g, const std::vector<hf::HFCode>& codes, std::size_t braces_bit_limit = 64);

json to_json(const zfc::AxiomReport& r);
json to_json(const std::vector<zfc::AxiomReport>& reports);

}  // namespace relaxed::io
