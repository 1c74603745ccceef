#pragma once

#include <span>
#include <string>
#include <vector>

#include "biunary/laws.hpp"

namespace biunary {

// "(s,e,s)"; sentinels print as "undefined".
std::string format_tuple(std::span<const std::string> names, const Tuple& t);
std::string format_element(std::span<const std::string> names, Element x);

// One line per report: "CS6 holds" or "CS6 fails at (a,a) [part 0: g vs e]".
std::string to_text(const CheckReport& r, std::span<const std::string> names);

// One JSON object per report:
// {"law":..,"holds":..,"witness":[labels],"witness_indices":[..],...}
std::string to_json(const std::vector<CheckReport>& reports,
                    std::span<const std::string> names);

std::string to_text(const Classification& c, std::span<const std::string> names);
std::string to_json(const Classification& c, std::span<const std::string> names);
std::string to_text(const CategoryClassification& c);
std::string to_json(const CategoryClassification& c);

}  // namespace biunary
