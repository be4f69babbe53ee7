#include "pomax/io.hpp"

#include <fstream>
#include <sstream>

#include "pomax/errors.hpp"

namespace pomax {

using nlohmann::json;

namespace {

Color parse_color(const json& v, const std::string& where) {
  if (!v.is_string())
    throw ParseError("InvalidDocument", where + ": color must be a string");
  std::string s = v.get<std::string>();
  if (s == "white") return Color::White;
  if (s == "black") return Color::Black;
  throw ParseError("InvalidColor", where + ": unknown color '" + s + "'");
}

int require_int(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw ParseError("InvalidDocument", where + ": missing integer field '" + key + "'");
  return it->get<int>();
}

ColoredPoset poset_from_json(const json& doc) {
  const json& elems = doc.at("elements");
  if (!elems.is_array())
    throw ParseError("InvalidDocument", "'elements' must be an array");
  std::vector<std::pair<std::string, Color>> elements;
  std::vector<std::pair<int, int>> coords;
  bool have_coords = !elems.empty();
  for (size_t i = 0; i < elems.size(); ++i) {
    const json& e = elems[i];
    std::string where = "elements[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string() || !e.contains("color"))
      throw ParseError("InvalidDocument", where + ": need string 'id' and 'color'");
    elements.emplace_back(e["id"].get<std::string>(), parse_color(e["color"], where));
    if (e.contains("row") && e.contains("col"))
      coords.emplace_back(require_int(e, "row", where), require_int(e, "col", where));
    else
      have_coords = false;
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array())
      throw ParseError("InvalidDocument", "'covers' must be an array");
    for (const json& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw ParseError("InvalidDocument", "each cover must be [lowerId, upperId]");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  ColoredPoset p = build_poset(elements, covers);
  if (doc.contains("diagram")) {
    if (!doc["diagram"].is_string())
      throw ParseError("InvalidDocument", "'diagram' must be a string");
    std::string d = doc["diagram"].get<std::string>();
    DiagramKind kind;
    if (d == "young")
      kind = DiagramKind::Young;
    else if (d == "skew")
      kind = DiagramKind::Skew;
    else
      throw ParseError("InvalidDocument", "unknown diagram kind '" + d + "'");
    if (!have_coords)
      throw ParseError("InvalidDocument", "diagram documents need row/col on every element");
    p.set_diagram(kind, coords);
  }
  return p;
}

Grid grid_from_json(const json& g) {
  if (!g.is_object() || !g.contains("side") || !g["side"].is_number_integer() ||
      !g.contains("cells") || !g["cells"].is_array())
    throw ParseError("InvalidDocument", "'grid' needs integer 'side' and array 'cells'");
  int side = g["side"].get<int>();
  std::vector<std::pair<std::pair<int, int>, Color>> cells;
  for (size_t i = 0; i < g["cells"].size(); ++i) {
    const json& c = g["cells"][i];
    std::string where = "cells[" + std::to_string(i) + "]";
    if (!c.is_object() || !c.contains("color"))
      throw ParseError("InvalidDocument", where + ": need row, col, color");
    int r = require_int(c, "row", where);
    int cl = require_int(c, "col", where);
    cells.push_back({{r, cl}, parse_color(c["color"], where)});
  }
  return make_grid(side, std::move(cells));
}

}  // namespace

Document parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("MalformedJson", e.what());
  }
  if (!doc.is_object())
    throw ParseError("InvalidDocument", "document root must be a JSON object");
  bool has_poset = doc.contains("elements");
  bool has_grid = doc.contains("grid");
  if (has_poset == has_grid)
    throw ParseError("InvalidDocument",
                     "document must have exactly one of 'elements' or 'grid'");
  Document out;
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object())
      throw ParseError("InvalidDocument", "'metadata' must be an object");
    out.metadata = doc["metadata"];
  }
  if (has_poset)
    out.poset = poset_from_json(doc);
  else
    out.grid = grid_from_json(doc["grid"]);
  return out;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("FileNotFound", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

ColoredPoset read_poset(const std::string& path) {
  Document doc = read_document(path);
  if (!doc.poset)
    throw ParseError("InvalidDocument", "'" + path + "' is not a poset document");
  return *doc.poset;
}

nlohmann::json poset_to_json(const ColoredPoset& p, nlohmann::json metadata) {
  json elems = json::array();
  bool with_coords = p.diagram_kind() != DiagramKind::None;
  for (int i = 0; i < p.size(); ++i) {
    json e = {{"id", p.label(i)}, {"color", color_name(p.color(i))}};
    if (with_coords) {
      e["row"] = p.coords()[size_t(i)].first;
      e["col"] = p.coords()[size_t(i)].second;
    }
    elems.push_back(std::move(e));
  }
  json covers = json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({p.label(lo), p.label(hi)});
  json doc = {{"elements", std::move(elems)}, {"covers", std::move(covers)}};
  if (p.diagram_kind() == DiagramKind::Young) doc["diagram"] = "young";
  if (p.diagram_kind() == DiagramKind::Skew) doc["diagram"] = "skew";
  if (!metadata.empty()) doc["metadata"] = std::move(metadata);
  return doc;
}

nlohmann::json grid_to_json(const Grid& g, nlohmann::json metadata) {
  json cells = json::array();
  for (int i = 0; i < g.size(); ++i)
    cells.push_back({{"row", g.cells[size_t(i)].first},
                     {"col", g.cells[size_t(i)].second},
                     {"color", color_name(g.colors[size_t(i)])}});
  json doc = {{"grid", {{"side", g.side}, {"cells", std::move(cells)}}}};
  if (!metadata.empty()) doc["metadata"] = std::move(metadata);
  return doc;
}

void write_document(const nlohmann::json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("CannotWrite", "cannot open '" + path + "' for writing");
  out << doc.dump(2) << '\n';
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const ColoredPoset& p, const SubsetBits* present) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle fontsize=10];\n";
  for (int i = 0; i < p.size(); ++i) {
    bool absent = present && !present->test(i);
    out << "  " << quote(p.label(i)) << " [";
    if (p.color(i) == Color::Black) {
      out << "style=" << (absent ? "\"filled,dashed\"" : "filled")
          << " fillcolor=black fontcolor=white";
    } else {
      out << (absent ? "style=dashed" : "style=solid");
    }
    out << "];\n";
  }
  for (auto [lo, hi] : p.covers())
    out << "  " << quote(p.label(lo)) << " -> " << quote(p.label(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pomax
