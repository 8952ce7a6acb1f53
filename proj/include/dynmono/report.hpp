#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dynmono/cascade.hpp"
#include "dynmono/constructors.hpp"
#include "dynmono/exact.hpp"

namespace dynmono {

// Whitespace-separated vertex ids with '#' comments. Range is checked by the
// consumer, not here.
std::vector<Vertex> parse_seed_set(std::string_view text);
std::vector<Vertex> load_seed_set(const std::string& path);

nlohmann::json to_json(const CascadeResult& result);
nlohmann::json to_json(const ExactResult& result);
nlohmann::json to_json(const Theorem1Params& params);
nlohmann::json to_json(const Theorem1Trace& trace);
nlohmann::json to_json(const MonopolySeed& seed);

// One line per round: round, |X_i|, |Y_i|, hull size.
std::string trace_table(const Theorem1Trace& trace);

}  // namespace dynmono
