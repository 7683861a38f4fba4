#ifndef POLYHODGE_JSON_IO_HPP
#define POLYHODGE_JSON_IO_HPP

#include <json.hpp>

#include "polyhodge/polytope.hpp"

namespace polyhodge {

/// Rational literals in JSON: integers, "p/q" strings, or decimal strings.
Rational rational_from_json(const nlohmann::json& value);
nlohmann::json rational_to_json(const Rational& value);

/// {"name": string, "vertices": [[...], ...]}
nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

}  // namespace polyhodge

#endif
