#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pomax/errors.hpp"
#include "pomax/generators.hpp"
#include "pomax/io.hpp"
#include "pomax/reductions.hpp"
#include "pomax/solver.hpp"

namespace py = pybind11;
using namespace pomax;

namespace {

SolveOptions make_options(bool use_shortcuts, bool decompose, int max_ground, bool force) {
  SolveOptions o;
  o.use_shortcuts = use_shortcuts;
  o.decompose = decompose;
  o.max_ground = max_ground;
  o.force = force;
  return o;
}

GameState state_for(const ColoredPoset& p, const std::string& rule) {
  if (rule == "pomax") return initial_state(RemovalRule::pomax(p));
  if (rule == "minmax") return initial_state(RemovalRule::minmax(p));
  throw ParseError("BadArguments", "rule must be pomax or minmax, got '" + rule + "'");
}

std::vector<std::string> labels_of(const ColoredPoset& p, const SubsetBits& s) {
  std::vector<std::string> out;
  s.for_each([&](int i) { out.push_back(p.label(i)); });
  return out;
}

}  // namespace

PYBIND11_MODULE(_pomax, m) {
  m.doc() = "exact solver for pomax and element-removal games on colored posets";

  py::enum_<Color>(m, "Color")
      .value("White", Color::White)
      .value("Black", Color::Black);

  py::class_<ColoredPoset>(m, "Poset")
      .def("__len__", &ColoredPoset::size)
      .def("label", &ColoredPoset::label, py::arg("i"))
      .def("labels",
           [](const ColoredPoset& p) {
             std::vector<std::string> out;
             for (int i = 0; i < p.size(); ++i) out.push_back(p.label(i));
             return out;
           })
      .def("color", &ColoredPoset::color, py::arg("i"))
      .def("index_of", &ColoredPoset::index_of, py::arg("label"))
      .def("covers", [](const ColoredPoset& p) { return p.covers(); })
      .def("less", &ColoredPoset::less, py::arg("i"), py::arg("j"))
      .def("height", &ColoredPoset::height)
      .def("is_forest", &ColoredPoset::is_forest)
      .def("is_chess_colored", &ColoredPoset::is_chess_colored)
      .def("blocking_triples",
           [](const ColoredPoset& p) {
             std::vector<std::tuple<std::string, std::string, std::string>> out;
             for (const BlockingTriple& t : p.blocking_triples())
               out.emplace_back(p.label(t.x), p.label(t.y), p.label(t.z));
             return out;
           })
      .def("essential_part",
           [](const ColoredPoset& p) { return labels_of(p, p.essential_part()); })
      .def("color_counts", [](const ColoredPoset& p) { return p.color_counts(p.all()); })
      .def("negate", &ColoredPoset::negate)
      .def("__repr__", [](const ColoredPoset& p) {
        return "<Poset with " + std::to_string(p.size()) + " elements>";
      });

  m.def("build_poset", &build_poset, py::arg("elements"), py::arg("covers"),
        "elements: [(label, Color)], covers: [(lower, upper)] by label");
  m.def("disjoint_sum", &disjoint_sum, py::arg("p"), py::arg("q"));

  m.def(
      "game_value",
      [](const ColoredPoset& p, const std::string& rule, bool use_shortcuts, bool decompose,
         int max_ground, bool force) {
        return game_value(state_for(p, rule),
                          make_options(use_shortcuts, decompose, max_ground, force));
      },
      py::arg("poset"), py::arg("rule") = "pomax", py::arg("use_shortcuts") = true,
      py::arg("decompose") = true, py::arg("max_ground") = 28, py::arg("force") = false);
  m.def(
      "outcome",
      [](const ColoredPoset& p, const std::string& rule, bool force) {
        SolveOptions o;
        o.force = force;
        return std::string(to_string(outcome(state_for(p, rule), o)));
      },
      py::arg("poset"), py::arg("rule") = "pomax", py::arg("force") = false);
  m.def(
      "verify_value",
      [](const ColoredPoset& p, int n, bool force) {
        SolveOptions o;
        o.force = force;
        return verify_value(p, n, o);
      },
      py::arg("poset"), py::arg("n"), py::arg("force") = false);
  m.def(
      "is_balanced",
      [](const ColoredPoset& p, bool force) {
        SolveOptions o;
        o.force = force;
        return is_balanced(p, o);
      },
      py::arg("poset"), py::arg("force") = false);
  m.def("tree_value", &tree_value, py::arg("poset"));
  m.def(
      "random_playout",
      [](const ColoredPoset& p, Color first, uint64_t seed) {
        return random_playout(initial_state(RemovalRule::pomax(p)), first, seed);
      },
      py::arg("poset"), py::arg("first"), py::arg("seed"));

  m.def("gen_chain", &gen_chain, py::arg("colors"));
  m.def(
      "gen_young",
      [](const std::vector<int>& parts, bool top_left_white) {
        return gen_young(make_partition(parts), top_left_white ? ChessParity::TopLeftWhite
                                                               : ChessParity::TopLeftBlack);
      },
      py::arg("parts"), py::arg("top_left_white") = true);
  m.def(
      "gen_skew",
      [](const std::vector<int>& outer, const std::vector<int>& inner, bool top_left_white) {
        return gen_skew(make_skew_shape(make_partition(outer), make_partition(inner)),
                        top_left_white ? ChessParity::TopLeftWhite : ChessParity::TopLeftBlack);
      },
      py::arg("outer"), py::arg("inner") = std::vector<int>{},
      py::arg("top_left_white") = true);
  m.def(
      "gen_random_forest",
      [](int n, uint64_t seed, bool chess) {
        return gen_random_forest(
            n, seed, chess ? ForestColoring::Chess : ForestColoring::UniformRandom);
      },
      py::arg("n"), py::arg("seed"), py::arg("chess") = false);
  m.def("gen_random_poset", &gen_random_poset, py::arg("n"), py::arg("seed"),
        py::arg("relation_density") = 0.3);
  m.def("fixture_names", &fixture_names);
  m.def(
      "fixture",
      [](const std::string& name) {
        Fixture fx = fixture(name);
        if (!fx.poset)
          throw ValidationError("NotAPoset", "fixture '" + name + "' is a grid document");
        return *fx.poset;
      },
      py::arg("name"), "poset fixtures only; the truncated-square fixture is a grid");

  m.def(
      "reduce_3sat",
      [](const std::string& dimacs) { return reduce_3sat(parse_dimacs(dimacs)).poset; },
      py::arg("dimacs"));
  m.def(
      "reduce_qbf",
      [](const std::string& qdimacs, bool normalize) {
        return reduce_qbf(parse_qdimacs(qdimacs, normalize)).poset;
      },
      py::arg("qdimacs"), py::arg("normalize") = false);
  m.def(
      "sat_bruteforce",
      [](const std::string& dimacs) { return sat_bruteforce(parse_dimacs(dimacs)); },
      py::arg("dimacs"), "satisfying assignment as a list of bools, or None");
  m.def(
      "qbf_bruteforce",
      [](const std::string& qdimacs, bool normalize) {
        return qbf_bruteforce(parse_qdimacs(qdimacs, normalize));
      },
      py::arg("qdimacs"), py::arg("normalize") = false);

  m.def(
      "loads",
      [](const std::string& text) {
        Document doc = parse_document(text);
        if (!doc.poset)
          throw ValidationError("NotAPoset", "grid documents have no python binding");
        return *doc.poset;
      },
      py::arg("text"), "poset from a JSON document string");
  m.def(
      "dumps", [](const ColoredPoset& p) { return poset_to_json(p).dump(2); },
      py::arg("poset"), "JSON document string");
  m.def(
      "export_dot", [](const ColoredPoset& p) { return export_dot(p); }, py::arg("poset"));
}
