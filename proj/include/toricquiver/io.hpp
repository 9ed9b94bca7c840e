#pragma once

#include "toricquiver/builtins.hpp"
#include "toricquiver/category.hpp"
#include "toricquiver/fan.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace toricquiver {

/// Malformed input file: bad JSON, wrong schema, unparsable numbers.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rationals are JSON integers, or strings "p" / "p/q". Integers that do not
// fit in 64 bits are written as strings.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const MatQ& m);
/// `cols_if_empty` gives the column count when the array has no rows.
MatQ matrix_from_json(const nlohmann::json& j, std::size_t cols_if_empty = 0);

/// {"dim": n, "rays": [[int,...],...], "max_cones": [[ray,...],...]}, 0-based.
FanData parse_fan_json(const std::string& text);
std::string fan_to_json(const FanData& fan);
/// Cones, maximal cones, l per cone, and the chosen chart bases.
std::string fan_info_json(const Fan& fan);
nlohmann::json fan_issue_json(const FanIssue& issue);

/// {"spaces": {"[0,1]": 2}, "u": {"[]->[0]": [[...]]}, "v": {"[0]->[]": ...},
///  "loops": {"[2]": [[[...]]]}}. Vertex keys are JSON arrays rendered as strings.
/// v-maps are keyed by their actual direction; the u-orientation is accepted too.
Representation parse_representation_json(const std::string& text);
std::string representation_to_json(const Representation& rep);

nlohmann::json report_to_json(const ConditionReport& report);
nlohmann::json morphism_to_json(const Morphism& m);

}  // namespace toricquiver
