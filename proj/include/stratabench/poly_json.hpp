#pragma once

#include "json.hpp"

#include "stratabench/polynomial.hpp"

namespace strata {

using json = nlohmann::json;

// {"vars":[...],"weights":[...],"terms":[{"c":"n/d","e":[...]},...]}
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);
// Reads a payload into `ring`: the payload's variables must be ring
// variables with the same weights. A bare string is parsed with
// parse_polynomial.
Polynomial polynomial_from_json(const json& j, const Ring& ring);

}  // namespace strata
