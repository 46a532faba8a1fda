/**
 * @file json_io.hpp
 * @brief JSON form of fields, presentations and polynomials.
 *
 *   { "field": {"kind": "ratfunc", "params": ["p","q"]},
 *     "generators": ["t","x","y"], "weights": [1,1,1], "precedence": ["t","x","y"],
 *     "rules": [ {"lhs": ["y","x"], "rhs": [ {"coeff": "q", "word": ["x","y"]} ]} ] }
 */
#pragma once

#include <json.hpp>

#include "orepi/presentation.hpp"

namespace orepi {

nlohmann::json field_to_json(const FieldCtx& ctx);
/// Accepts the object form above or a string such as "cyclo:6".
CtxPtr field_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Presentation& p, const NCPoly& a);
NCPoly poly_from_json(const Presentation& p, const nlohmann::json& j);

nlohmann::json presentation_to_json(const Presentation& p);
/// Throws Error(InvalidPresentation) or Error(ParseError) on bad input.
Presentation presentation_from_json(const nlohmann::json& j);

}  // namespace orepi
