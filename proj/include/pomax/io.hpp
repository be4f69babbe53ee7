#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "pomax/rules.hpp"

namespace pomax {

// One ground structure per document: either a poset or a grid, plus free-form
// metadata (always a JSON object, possibly empty).
struct Document {
  std::optional<ColoredPoset> poset;
  std::optional<Grid> grid;
  nlohmann::json metadata = nlohmann::json::object();
};

// Poset documents: {"elements":[{"id","color"[,"row","col"]}],
// "covers":[[lower,upper]...][,"diagram":"young"|"skew"][,"metadata":{...}]}.
// Grid documents: {"grid":{"side":n,"cells":[{"row","col","color"}...]}
// [,"metadata":{...}]}. Malformed text or schema raises ParseError
// (MalformedJson / InvalidDocument / InvalidColor); structural problems
// propagate the build_poset / make_grid taxonomy.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);

// Convenience for the poset flavor; rejects grid documents.
ColoredPoset read_poset(const std::string& path);

nlohmann::json poset_to_json(const ColoredPoset& p,
                             nlohmann::json metadata = nlohmann::json::object());
nlohmann::json grid_to_json(const Grid& g,
                            nlohmann::json metadata = nlohmann::json::object());

// Elements and covers are emitted in index order, so output is diffable and
// read∘write is the identity.
void write_document(const nlohmann::json& doc, const std::string& path);

// Hasse diagram, edges drawn upward (rankdir=BT). Black nodes filled, White
// unfilled; with `present`, absent elements render dashed. Byte-stable.
std::string export_dot(const ColoredPoset& p, const SubsetBits* present = nullptr);

}  // namespace pomax
