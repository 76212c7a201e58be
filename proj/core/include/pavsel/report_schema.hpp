#pragma once

#include <json.hpp>
#include <optional>
#include <string>

namespace pavsel {

// Validates an instance against the subset of JSON Schema the shipped report
// schemas use: type (string or array of strings, with "integer" meaning an
// integral number), enum, const, pattern (ECMAScript, unanchored search),
// minimum/maximum, required, properties, additionalProperties (boolean or
// schema), items (single schema), minItems/maxItems, and $ref into local
// $defs. Returns nullopt when valid, otherwise a "path: problem" message for
// the first violation found.
std::optional<std::string> validate_against_schema(const nlohmann::json& instance,
                                                   const nlohmann::json& schema);

}  // namespace pavsel
