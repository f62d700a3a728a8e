#pragma once

#include "lambdalie/param_scalar.hpp"

#include <json.hpp>

namespace lambdalie {

using Json = nlohmann::json;

Json poly_to_json(const ParamPoly& p);
ParamPoly poly_from_json(const Json& j);
Json scalar_to_json(const ParamScalar& s);
ParamScalar scalar_from_json(const Json& j);  // also accepts a formula string

}  // namespace lambdalie
