#pragma once

#include <string>

#include <json.hpp>

#include "hyperdyn/system.hpp"

namespace hyperdyn {

using Json = nlohmann::ordered_json;

/// Parses and fully validates a space-description document:
///   {"limits":[{"id":str,"value":"p/q"},...],
///    "limit_perm":{id:id,...},
///    "chains":[{"id":str,"kind":"bi_infinite"|"periodic",
///               "alpha":id,"omega":id,"generator":{...}}   (bi_infinite)
///              {"id":str,"kind":"periodic","cycle":["p/q",...]}]}
/// Generators: {"kind":"logistic","p":..,"q":..} | {"kind":"harmonic","a":..,"b":..}
///           | {"kind":"explicit_head","head":[..],"tail":{..}}.
/// Unknown fields are rejected.
SymbolicSystem parse_space(const Json& doc);
SymbolicSystem parse_space_text(const std::string& text);

Json space_to_json(const SymbolicSystem& system);

Json generator_to_json(const ChainGenerator& gen);
ChainGenerator generator_from_json(const Json& j);

Json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);

}  // namespace hyperdyn
