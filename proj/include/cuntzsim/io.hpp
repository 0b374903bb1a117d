#pragma once

// JSON file formats.
//   operator: {"r": int, "dim": int, "re": [[...]], "im": [[...]]}, row-major
//   vector:   {"r": int, "dim": int, "re": [...], "im": [...]}
//   sectors:  {"r": int, "sectors": [{"T": "3/2", "mult": 1, "dim": 4, "basis": [...]}]}
// Unknown keys are ignored on input. Doubles are written in shortest
// round-trip form, so write -> read -> write is byte-identical.

#include <string>
#include <string_view>

#include "cuntzsim/protocol.hpp"
#include "cuntzsim/repsu2.hpp"
#include "json.hpp"

namespace cuntzsim::io {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "cuntzsim/1";

json operator_to_json(const repsu2::TensorOperator& op);
/// Throws ParseError naming the offending field.
repsu2::TensorOperator operator_from_json(const json& j);

json vector_to_json(const StateVector& v);
StateVector vector_from_json(const json& j);

json sector_table_to_json(const repsu2::SectorTable& table, bool include_basis);
repsu2::SectorTable sector_table_from_json(const json& j);

json capacity_to_json(const protocol::Capacity& cap);
json summary_to_json(const protocol::SimulationSummary& s);
protocol::SimulationSummary summary_from_json(const json& j);

/// Parses text; ParseError carries the line/column of malformed input.
json parse_json(std::string_view text);
std::string dump(const json& j);

}  // namespace cuntzsim::io
