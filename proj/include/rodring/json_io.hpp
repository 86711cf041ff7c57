#pragma once

#include <json.hpp>

#include "rodring/counting.hpp"
#include "rodring/enumerate.hpp"
#include "rodring/geometry.hpp"

namespace rodring {

// ordered_json keeps keys in insertion order, so serialized output is stable
// and reads in the documented shape.
using Json = nlohmann::ordered_json;

// {"m":3,"n":3,"cells":[[0,0],[0,1],...]}
Json to_json(const Ring& ring);

// {"k":4,"word":"RLCC","tiles":[{"kind":"dimer","start":0},...]}
Json to_json(const Tiling& tiling);

// {"m":2,"n":2,"tiles":[{"kind":"dimer","cells":[[0,0],[0,1]]},...]}
Json to_json(const GeometricTiling& tiling);

// {"m":3,"n":3,"equivalence":"none","method":"closed_form","value":"47"}
// value is a decimal string: counts outgrow every fixed-width JSON number.
Json to_json(const CountResult& result);

Equivalence equivalence_from_name(const std::string& name);
CountMethod method_from_name(const std::string& name);

// What `enumerate` writes and `render --input` reads back.
struct Catalog {
  BorderSpec spec;
  Equivalence up_to = Equivalence::None;
  std::vector<Tiling> tilings;
};

Json to_json(const Catalog& catalog);

// Parses and fully re-validates (word/tiles agreement, ring length, count).
// Throws std::invalid_argument on any schema or consistency violation.
Catalog catalog_from_json(const Json& j);

}  // namespace rodring
