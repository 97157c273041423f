#pragma once

// Text format for HandleDecomposition. A JSON object with exactly these keys:
//
//   {
//     "h0": 1,
//     "one_handles": ["d1"],
//     "two_handles": [{"label": "k1", "framing": -4, "knot": "unknot"}],
//     "linking": [[-4]],
//     "incidence": [[2]],
//     "h3": 0,
//     "h4": 0
//   }
//
// Unknown framings and linking numbers are the string "?". Knot tags are
// "unknot", "right-trefoil" or "?". Integers outside the 64-bit range are
// written as decimal strings.

#include <kirby/handlebody.hpp>

#include <json.hpp>

#include <string>

namespace kirby {

nlohmann::ordered_json to_json(const HandleDecomposition& x);
HandleDecomposition decomposition_from_json(const nlohmann::json& j);

std::string write_decomposition(const HandleDecomposition& x);
/// Throws Error(Format) on malformed input and Error(Domain) on invariant
/// violations.
HandleDecomposition read_decomposition(const std::string& text);

HandleDecomposition load_decomposition_file(const std::string& path);
void save_decomposition_file(const HandleDecomposition& x, const std::string& path);

nlohmann::ordered_json integer_to_json(const Integer& v);
nlohmann::ordered_json ext_to_json(const ExtInt& v);

}  // namespace kirby
