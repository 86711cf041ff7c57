#include "rodring/json_io.hpp"

#include <stdexcept>

namespace rodring {

Json to_json(const Ring& ring) {
  Json cells = Json::array();
  for (const auto& [r, c] : ring.cells) cells.push_back(Json::array({r, c}));
  return Json{{"m", ring.spec.m}, {"n", ring.spec.n}, {"cells", cells}};
}

Json to_json(const Tiling& tiling) {
  Json tiles = Json::array();
  for (const RingTile& t : tiling.tiles) {
    tiles.push_back({{"kind", t.kind == TileKind::Dimer ? "dimer" : "monomer"},
                     {"start", t.start}});
  }
  return Json{{"k", tiling.ring_length}, {"word", tiling.word()}, {"tiles", tiles}};
}

Json to_json(const GeometricTiling& tiling) {
  Json tiles = Json::array();
  for (const GeoTile& t : tiling.tiles) {
    Json cells = Json::array();
    for (const auto& [r, c] : t.cells) cells.push_back(Json::array({r, c}));
    tiles.push_back({{"kind", kind_name(t.length)}, {"cells", cells}});
  }
  return Json{{"m", tiling.spec.m}, {"n", tiling.spec.n}, {"tiles", tiles}};
}

Json to_json(const CountResult& result) {
  return Json{{"m", result.spec.m},
              {"n", result.spec.n},
              {"equivalence", name_of(result.equivalence)},
              {"method", name_of(result.method)},
              {"value", to_decimal(result.value)}};
}

Equivalence equivalence_from_name(const std::string& name) {
  if (name == "none") return Equivalence::None;
  if (name == "rotational") return Equivalence::Rotational;
  if (name == "dihedral") return Equivalence::Dihedral;
  throw std::invalid_argument("unknown equivalence \"" + name + "\"");
}

CountMethod method_from_name(const std::string& name) {
  if (name == "closed_form") return CountMethod::ClosedForm;
  if (name == "transfer_matrix") return CountMethod::TransferMatrix;
  if (name == "burnside_first_principles") return CountMethod::BurnsideFirstPrinciples;
  if (name == "oracle") return CountMethod::Oracle;
  throw std::invalid_argument("unknown count method \"" + name + "\"");
}

Json to_json(const Catalog& catalog) {
  Json tilings = Json::array();
  for (const Tiling& t : catalog.tilings) tilings.push_back(to_json(t));
  return Json{{"m", catalog.spec.m},
              {"n", catalog.spec.n},
              {"k", ring_length(catalog.spec)},
              {"up_to", name_of(catalog.up_to)},
              {"count", catalog.tilings.size()},
              {"ring", to_json(ring_cells(catalog.spec))},
              {"tilings", tilings}};
}

Catalog catalog_from_json(const Json& j) {
  try {
    Catalog catalog;
    catalog.spec = BorderSpec{j.at("m").get<int>(), j.at("n").get<int>()};
    const int k = ring_length(catalog.spec);
    if (j.at("k").get<int>() != k) {
      throw std::invalid_argument("catalog k does not match its m and n");
    }
    catalog.up_to = equivalence_from_name(j.at("up_to").get<std::string>());
    for (const Json& tj : j.at("tilings")) {
      Tiling t = tiling_from_word(tj.at("word").get<std::string>());
      if (t.ring_length != k || tj.at("k").get<int>() != k) {
        throw std::invalid_argument("catalog tiling has the wrong ring length");
      }
      // The redundant tiles array must agree with the word.
      const Json& tiles = tj.at("tiles");
      if (tiles.size() != t.tiles.size()) {
        throw std::invalid_argument("catalog tiling's tiles disagree with its word");
      }
      for (size_t i = 0; i < t.tiles.size(); ++i) {
        const bool dimer = t.tiles[i].kind == TileKind::Dimer;
        if (tiles[i].at("kind").get<std::string>() != (dimer ? "dimer" : "monomer") ||
            tiles[i].at("start").get<int>() != t.tiles[i].start) {
          throw std::invalid_argument("catalog tiling's tiles disagree with its word");
        }
      }
      catalog.tilings.push_back(std::move(t));
    }
    if (j.at("count").get<size_t>() != catalog.tilings.size()) {
      throw std::invalid_argument("catalog count field disagrees with its tilings");
    }
    return catalog;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed catalog JSON: ") + e.what());
  }
}

}  // namespace rodring
