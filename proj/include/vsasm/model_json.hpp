/* JSON forms of the combinatorial objects:
     path family  {"interpretation": "I1", "sigma": [..1-based..],
                   "paths": [[[x,y],...],...], "weight": <polynomial>}
     pair         {"P": [[...],...], "Q": [[...],...]} rows top-to-bottom
     Magog        [[1],[1,2],...] row lists */
#pragma once

#include <json.hpp>

#include "vsasm/pairs.hpp"
#include "vsasm/paths.hpp"

namespace vsasm {

nlohmann::json family_to_json(const PathFamily& f);

nlohmann::json pair_to_json(const PPPair& pair);
PPPair pair_from_json(const nlohmann::json& j);

nlohmann::json magog_to_json(const MagogTriangle& m);

// Reads a row-strict plane partition given as {"Q": rows} or bare rows.
PPRows rspp_from_json(const nlohmann::json& j);

}  // namespace vsasm
