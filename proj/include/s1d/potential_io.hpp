#ifndef S1D_POTENTIAL_IO_HPP
#define S1D_POTENTIAL_IO_HPP

// JSON forms:
//   Potential      {"breakpoints": [...], "values": [...]}
//   PotentialSpec  {"kind": "square_well", "params": {"depth": 10.0}}
// Custom specs carry breakpoints/values inside "params".

#include <string>
#include <string_view>

#include <json.hpp>

#include "s1d/potential.hpp"

namespace s1d {

nlohmann::json to_json(const Potential& p);
nlohmann::json to_json(const PotentialSpec& spec);

/// Accepts either the Potential or the PotentialSpec form.
Potential potential_from_json(const nlohmann::json& j);
PotentialSpec spec_from_json(const nlohmann::json& j);

std::string kind_name(PotentialKind kind);
PotentialKind parse_kind(std::string_view name);

/// Inline JSON text, or "@path" to read the JSON from a file.
Potential parse_potential(const std::string& text);

}  // namespace s1d

#endif  // S1D_POTENTIAL_IO_HPP
