#pragma once

#include <string>

#include <json.hpp>

#include "plh/plmap.hpp"

namespace plh {

/// {"breakpoints": [["0","0"], ["1/2","1/4"], ...]}
nlohmann::json to_json(const PLHomeo& f);
nlohmann::json to_json(const Interval& interval);

/// Strict: rejects non-monotone or non-canonical lists, naming the first
/// offending index. Keys other than "breakpoints" are ignored.
PLHomeo element_from_json(const nlohmann::json& doc);
PLHomeo element_from_text(const std::string& text);

} // namespace plh
