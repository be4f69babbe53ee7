#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "pomax/errors.hpp"
#include "pomax/generators.hpp"
#include "pomax/io.hpp"
#include "pomax/solver.hpp"

using namespace pomax;
using nlohmann::json;

namespace {

ColoredPoset intro() {
  return build_poset({{"z", Color::Black}, {"w", Color::White},
                      {"x", Color::White}, {"y", Color::Black}},
                     {{"x", "z"}, {"y", "z"}, {"y", "w"}});
}

bool same_poset(const ColoredPoset& a, const ColoredPoset& b) {
  if (a.size() != b.size() || a.covers() != b.covers()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.label(i) != b.label(i) || a.color(i) != b.color(i)) return false;
  return a.diagram_kind() == b.diagram_kind() && a.coords() == b.coords();
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("poset documents round-trip") {
  for (const auto& name : fixture_names()) {
    Fixture f = fixture(name);
    if (!f.poset) continue;
    json doc = poset_to_json(*f.poset);
    Document back = parse_document(doc.dump());
    REQUIRE(back.poset.has_value());
    CAPTURE(name);
    CHECK(same_poset(*back.poset, *f.poset));
    CHECK(poset_to_json(*back.poset) == doc);
  }
}

TEST_CASE("grid documents round-trip") {
  Grid g = fixture("fig6_truncated").grid.value();
  json doc = grid_to_json(g, {{"name", "fig6"}});
  Document back = parse_document(doc.dump());
  REQUIRE(back.grid.has_value());
  CHECK(back.grid->side == g.side);
  CHECK(back.grid->cells == g.cells);
  CHECK(back.grid->colors == g.colors);
  CHECK(back.metadata.at("name") == "fig6");
  CHECK(grid_to_json(*back.grid, back.metadata) == doc);
}

TEST_CASE("diagram coordinates survive serialization") {
  ColoredPoset y = gen_young(make_partition({4, 4, 3}), ChessParity::TopLeftWhite);
  Document back = parse_document(poset_to_json(y).dump());
  REQUIRE(back.poset.has_value());
  CHECK(back.poset->diagram_kind() == DiagramKind::Young);
  CHECK(back.poset->coords() == y.coords());
  // the reparsed poset still solves by certificate
  SolveStats stats;
  CHECK(game_value(*back.poset, {}, &stats) == game_value(y));
  CHECK(stats.shortcut_hits >= 1);
  CHECK(stats.states == 0);
}

TEST_CASE("file round-trip and read errors") {
  auto path = temp_file("pomax_io_test.json");
  write_document(poset_to_json(intro(), {{"name", "intro"}}), path.string());
  Document doc = read_document(path.string());
  REQUIRE(doc.poset.has_value());
  CHECK(doc.poset->size() == 4);
  CHECK(doc.metadata.at("name") == "intro");
  CHECK(same_poset(read_poset(path.string()), intro()));
  std::filesystem::remove(path);

  CHECK_THROWS_WITH_AS(read_document("/nonexistent/x.json"),
                       doctest::Contains("FileNotFound"), ParseError);
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_WITH_AS(parse_document("{not json"), doctest::Contains("MalformedJson"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_document("[1,2]"), doctest::Contains("InvalidDocument"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_document("{}"), doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"elements":[],"grid":{"side":1,"cells":[]}})"),
                       doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"elements":[{"id":"a"}]})"),
                       doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"elements":[{"id":"a","color":"red"}]})"),
                       doctest::Contains("InvalidColor"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"elements":[{"id":"a","color":5}]})"),
                       doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"elements":[{"id":"a","color":"white"}],"covers":[["a"]]})"),
      doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"elements":[{"id":"a","color":"white"}],"diagram":"weird"})"),
      doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"elements":[{"id":"a","color":"white"}],"diagram":"young"})"),
      doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_document(R"({"elements":[{"id":"a","color":"white"}],"metadata":7})"),
      doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"grid":{"cells":[]}})"),
                       doctest::Contains("InvalidDocument"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"grid":{"side":2,"cells":[{"row":9,"col":1,"color":"white"}]}})"),
                       doctest::Contains("BadGrid"), ValidationError);

  // structurally bad posets go through the construction taxonomy
  CHECK_THROWS_WITH_AS(
      parse_document(
          R"({"elements":[{"id":"a","color":"white"}],"covers":[["a","a"]]})"),
      doctest::Contains("CycleDetected"), ValidationError);
}

TEST_CASE("dot export") {
  const char* expect =
      "digraph poset {\n"
      "  rankdir=BT;\n"
      "  node [shape=circle fontsize=10];\n"
      "  \"z\" [style=filled fillcolor=black fontcolor=white];\n"
      "  \"w\" [style=solid];\n"
      "  \"x\" [style=solid];\n"
      "  \"y\" [style=filled fillcolor=black fontcolor=white];\n"
      "  \"x\" -> \"z\";\n"
      "  \"y\" -> \"z\";\n"
      "  \"y\" -> \"w\";\n"
      "}\n";
  ColoredPoset p = intro();
  CHECK(export_dot(p) == expect);
  CHECK(export_dot(p) == export_dot(p));  // byte-stable

  SubsetBits present(4, true);
  present.reset(0);  // z removed
  std::string dashed = export_dot(p, &present);
  CHECK(dashed.find("\"z\" [style=\"filled,dashed\"") != std::string::npos);
  CHECK(dashed.find("\"w\" [style=solid]") != std::string::npos);

  CHECK(export_dot(build_poset({}, {})) ==
        "digraph poset {\n  rankdir=BT;\n  node [shape=circle fontsize=10];\n}\n");
}

}  // TEST_SUITE
