/* JSON form of a Laurent polynomial:
     {"vars": ["u","v",...], "terms": [{"c": "<decimal>", "e": [..]}, ...]}
   Terms appear in the ring's canonical order and coefficients are decimal
   strings, so serialization is a bijection on canonical polynomials. */
#pragma once

#include <json.hpp>

#include "vsasm/laurent.hpp"

namespace vsasm {

nlohmann::json poly_to_json(const LaurentPoly& p);

// Rebuilds the polynomial, reusing `ring` when it matches the listed
// variables (pass nullptr to always build a fresh ring).
LaurentPoly poly_from_json(const nlohmann::json& j, RingPtr ring = nullptr);

}  // namespace vsasm
