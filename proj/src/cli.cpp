#include "pomax/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pomax/errors.hpp"
#include "pomax/generators.hpp"
#include "pomax/io.hpp"
#include "pomax/reductions.hpp"
#include "pomax/solver.hpp"

namespace pomax {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("FileNotFound", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Grid documents always play the corner rule; posets default to pomax.
RemovalRule rule_for(const Document& doc, const std::string& rule_opt) {
  if (doc.grid) {
    if (!rule_opt.empty())
      throw ParseError("BadArguments", "--rule applies to poset documents only");
    return RemovalRule::corner(*doc.grid);
  }
  if (rule_opt == "minmax") return RemovalRule::minmax(*doc.poset);
  return RemovalRule::pomax(*doc.poset);
}

std::string join_labels(const RemovalRule& rule, const SubsetBits& s) {
  std::string out;
  s.for_each([&](int i) {
    if (!out.empty()) out += ",";
    out += rule.label(i);
  });
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }
const char* tf(bool b) { return b ? "true" : "false"; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("BadPartition", "expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

std::vector<Color> parse_color_string(const std::string& text) {
  std::vector<Color> out;
  for (char ch : text) {
    if (ch == 'B' || ch == 'b')
      out.push_back(Color::Black);
    else if (ch == 'W' || ch == 'w')
      out.push_back(Color::White);
    else
      throw ParseError("BadColorString", std::string("expected B/W characters, got '") + ch + "'");
  }
  return out;
}

ChessParity parse_parity(const std::string& s) {
  return s == "top-left-black" ? ChessParity::TopLeftBlack : ChessParity::TopLeftWhite;
}

void cmd_solve(std::ostream& out, const std::string& path, const std::string& rule_opt,
               bool no_shortcuts, bool force) {
  Document doc = read_document(path);
  GameState st = initial_state(rule_for(doc, rule_opt));
  SolveOptions opts;
  opts.use_shortcuts = !no_shortcuts;
  opts.force = force;
  SolveStats stats;
  int v = game_value(st, opts, &stats);
  out << "value=" << v << "\n";
  out << "outcome=" << to_string(outcome_from_value(v)) << "\n";
  out << "states=" << stats.states << "\n";
  out << "shortcuts=" << stats.shortcut_hits << "\n";
}

void cmd_analyze(std::ostream& out, const std::string& path, bool force) {
  Document doc = read_document(path);
  if (doc.grid) {
    const Grid& g = doc.grid.value();
    RemovalRule rule = RemovalRule::corner(g);
    SubsetBits all(g.size(), true);
    auto [w, b] = rule.color_counts(all);
    out << "grid_side=" << g.side << "\n";
    out << "cells=" << g.size() << "\n";
    out << "white=" << w << "\n";
    out << "black=" << b << "\n";
    out << "corners=" << rule.removable(all).count() << "\n";
    return;
  }
  const ColoredPoset& p = doc.poset.value();
  auto [w, b] = p.color_counts(p.all());
  out << "elements=" << p.size() << "\n";
  out << "white=" << w << "\n";
  out << "black=" << b << "\n";
  out << "height=" << p.height() << "\n";
  out << "forest=" << tf(p.is_forest()) << "\n";
  out << "chess_colored=" << tf(p.is_chess_colored()) << "\n";
  auto triples = p.blocking_triples();
  out << "blocking_triples=" << triples.size() << "\n";
  for (const BlockingTriple& t : triples)
    out << "triple=" << p.label(t.x) << "<" << p.label(t.y) << "<" << p.label(t.z) << "\n";
  if (p.is_forest()) {
    RemovalRule rule = RemovalRule::pomax(p);
    out << "essential_part=" << join_labels(rule, p.essential_part()) << "\n";
    out << "tree_value=" << tree_value(p) << "\n";
  }
  if (p.size() <= 20 || force) {
    SolveOptions opts;
    opts.force = force;
    GameState st = initial_state(RemovalRule::pomax(p));
    bool bal = is_balanced(st, opts);
    out << "balanced=" << tf(bal) << "\n";
    if (bal) out << "balanced_value=" << balanced_value(st) << "\n";
  } else {
    out << "balanced=unknown\n";
  }
}

json role_map(const ReductionPoset& rp) {
  json m = json::object();
  for (int i = 0; i < rp.poset.size(); ++i)
    m[rp.poset.label(i)] = to_string(rp.roles[size_t(i)]);
  return m;
}

void cmd_reduce(std::ostream& out, bool qbf, const std::string& formula_path, bool normalize,
                const std::string& out_path) {
  std::string text = read_file(formula_path);
  ReductionPoset rp;
  json meta;
  if (qbf) {
    QbfFormula f = parse_qdimacs(text, normalize);
    rp = reduce_qbf(f);
    meta = {{"reduction", "qbf"}, {"vars", f.num_vars},
            {"clauses", f.matrix.clauses.size()}, {"roleMap", role_map(rp)}};
    out << "vars=" << f.num_vars << "\n";
    out << "clauses=" << f.matrix.clauses.size() << "\n";
  } else {
    CnfFormula f = parse_dimacs(text);
    rp = reduce_3sat(f);
    meta = {{"reduction", "3sat"}, {"vars", f.num_vars},
            {"clauses", f.clauses.size()}, {"roleMap", role_map(rp)}};
    out << "vars=" << f.num_vars << "\n";
    out << "clauses=" << f.clauses.size() << "\n";
  }
  out << "elements=" << rp.poset.size() << "\n";
  out << "height=" << rp.poset.height() << "\n";
  write_document(poset_to_json(rp.poset, std::move(meta)), out_path);
  out << "wrote=" << out_path << "\n";
}

void cmd_verify_reduction(std::ostream& out, bool qbf, const std::string& formula_path,
                          bool normalize, bool force) {
  std::string text = read_file(formula_path);
  SolveOptions opts;
  opts.force = force;
  ReductionReport rep;
  if (qbf) {
    rep = verify_reduction_qbf(parse_qdimacs(text, normalize), opts);
    out << "value=" << rep.value << "\n";
    out << "qbf=" << tf(rep.formula_true) << "\n";
  } else {
    rep = verify_reduction_sat(parse_dimacs(text), opts);
    out << "value=" << rep.value << "\n";
    out << "sat=" << tf(rep.formula_true) << "\n";
  }
  out << "agree=" << yn(rep.agree) << "\n";
  out << "nonpositive=" << yn(rep.nonpositive) << "\n";
  out << "white_first_loses=" << yn(rep.white_first_loses) << "\n";
}

void write_poset_result(std::ostream& out, const ColoredPoset& p, json meta,
                        const std::string& out_path) {
  out << "elements=" << p.size() << "\n";
  write_document(poset_to_json(p, std::move(meta)), out_path);
  out << "wrote=" << out_path << "\n";
}

void cmd_generate_fixture(std::ostream& out, const std::string& name,
                          const std::string& out_path) {
  Fixture fx = fixture(name);
  json meta = {{"name", fx.name}};
  for (const auto& [k, v] : fx.metadata) meta[k] = v;
  if (fx.grid) {
    json trace = json::array();
    for (auto [r, c] : fx.removal_trace) trace.push_back({r, c});
    meta["removalTrace"] = std::move(trace);
    out << "cells=" << fx.grid->size() << "\n";
    write_document(grid_to_json(*fx.grid, std::move(meta)), out_path);
    out << "wrote=" << out_path << "\n";
    return;
  }
  write_poset_result(out, fx.poset.value(), std::move(meta), out_path);
}

void cmd_play(std::istream& in, std::ostream& out, const std::string& path,
              const std::string& human, const std::string& rule_opt, bool force) {
  Document doc = read_document(path);
  GameState st = initial_state(rule_for(doc, rule_opt));
  SolveOptions opts;
  opts.force = force;
  Color human_color = human == "white" ? Color::White : Color::Black;
  out << "rule=" << rule_name(st.rule.kind()) << "\n";
  out << "you=" << color_name(human_color) << "\n";
  Color mover = Color::White;  // White always moves first here
  while (true) {
    SubsetBits moves = legal_moves(st, mover);
    if (moves.none()) {
      out << color_name(mover) << " has no move\n";
      out << "loser=" << color_name(mover) << "\n";
      out << "winner=" << color_name(opposite(mover)) << "\n";
      return;
    }
    if (mover == human_color) {
      out << "your moves: " << join_labels(st.rule, moves) << "\n> " << std::flush;
      std::string line;
      int idx = -1;
      while (true) {
        if (!std::getline(in, line)) {
          out << "\naborted=end-of-input\n";
          return;
        }
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        size_t start = line.find_first_not_of(' ');
        line = start == std::string::npos ? "" : line.substr(start);
        if (line == "quit") {
          out << "aborted=quit\n";
          return;
        }
        idx = st.rule.index_of(line);
        if (idx >= 0 && moves.test(idx)) break;
        out << "illegal move '" << line << "'; your moves: " << join_labels(st.rule, moves)
            << "\n> " << std::flush;
      }
      st = apply_move(st, idx);
      out << "you remove " << line << "\n";
    } else {
      int mv = best_move(st, mover, opts);
      st = apply_move(st, mv);
      out << "engine removes " << st.rule.label(mv) << "\n";
    }
    mover = opposite(mover);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact solver and analysis toolkit for pomax and element-removal games"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "compute the game value of a document");
  std::string solve_path, solve_rule;
  bool solve_noshort = false, solve_force = false;
  solve->add_option("document", solve_path, "poset or grid JSON document")->required();
  solve->add_option("--rule", solve_rule, "pomax (default) or minmax")
      ->check(CLI::IsMember({"pomax", "minmax"}));
  solve->add_flag("--no-shortcuts", solve_noshort, "disable structural certificates");
  solve->add_flag("--force", solve_force, "ignore the state-space size bound");
  solve->callback([&] { cmd_solve(out, solve_path, solve_rule, solve_noshort, solve_force); });

  auto* analyze = app.add_subcommand("analyze", "structural report for a document");
  std::string analyze_path;
  bool analyze_force = false;
  analyze->add_option("document", analyze_path, "poset or grid JSON document")->required();
  analyze->add_flag("--force", analyze_force, "ignore size bounds for the exact checks");
  analyze->callback([&] { cmd_analyze(out, analyze_path, analyze_force); });

  auto* reduce = app.add_subcommand("reduce", "compile a formula into a poset document");
  reduce->require_subcommand(1);
  std::string red_formula, red_out;
  bool red_normalize = false;
  auto* red_sat = reduce->add_subcommand("sat", "3CNF (DIMACS) to pomax poset");
  red_sat->add_option("formula", red_formula, "DIMACS CNF file")->required();
  red_sat->add_option("-o,--out", red_out, "output poset document")->required();
  red_sat->callback([&] { cmd_reduce(out, false, red_formula, false, red_out); });
  auto* red_qbf = reduce->add_subcommand("qbf", "QBF (QDIMACS) to pomax poset");
  red_qbf->add_option("formula", red_formula, "QDIMACS file")->required();
  red_qbf->add_option("-o,--out", red_out, "output poset document")->required();
  red_qbf->add_flag("--normalize", red_normalize, "repair a non-alternating prefix");
  red_qbf->callback([&] { cmd_reduce(out, true, red_formula, red_normalize, red_out); });

  auto* verify = app.add_subcommand("verify-reduction", "solve a reduction and compare "
                                                        "against the brute-force oracle");
  verify->require_subcommand(1);
  std::string ver_formula;
  bool ver_normalize = false, ver_force = false;
  auto* ver_sat = verify->add_subcommand("sat", "3CNF instance");
  ver_sat->add_option("formula", ver_formula, "DIMACS CNF file")->required();
  ver_sat->add_flag("--force", ver_force, "ignore the state-space size bound");
  ver_sat->callback([&] { cmd_verify_reduction(out, false, ver_formula, false, ver_force); });
  auto* ver_qbf = verify->add_subcommand("qbf", "QBF instance");
  ver_qbf->add_option("formula", ver_formula, "QDIMACS file")->required();
  ver_qbf->add_flag("--normalize", ver_normalize, "repair a non-alternating prefix");
  ver_qbf->add_flag("--force", ver_force, "ignore the state-space size bound");
  ver_qbf->callback([&] { cmd_verify_reduction(out, true, ver_formula, ver_normalize, ver_force); });

  auto* gen = app.add_subcommand("generate", "build structured instances and fixtures");
  gen->require_subcommand(1);
  std::string gen_out, gen_arg, gen_parity = "top-left-white", gen_coloring = "random";
  uint64_t gen_seed = 0;
  int gen_n = 0, gen_removals = 0;

  auto* g_chain = gen->add_subcommand("chain", "chain poset from a color string like BWBBWBW");
  g_chain->add_option("colors", gen_arg, "bottom-to-top colors, B/W per element")->required();
  g_chain->add_option("-o,--out", gen_out, "output document")->required();
  g_chain->callback([&] {
    write_poset_result(out, gen_chain(parse_color_string(gen_arg)),
                       {{"generator", "chain"}, {"colors", gen_arg}}, gen_out);
  });

  auto* g_young = gen->add_subcommand("young", "chess-colored Young diagram poset");
  g_young->add_option("partition", gen_arg, "row lengths, e.g. 5,4,3,3,1")->required();
  g_young->add_option("--parity", gen_parity, "which parity class is white")
      ->check(CLI::IsMember({"top-left-white", "top-left-black"}));
  g_young->add_option("-o,--out", gen_out, "output document")->required();
  g_young->callback([&] {
    Partition shape = make_partition(parse_int_list(gen_arg));
    write_poset_result(out, gen_young(shape, parse_parity(gen_parity)),
                       {{"generator", "young"}, {"partition", gen_arg}, {"parity", gen_parity}},
                       gen_out);
  });

  auto* g_skew = gen->add_subcommand("skew", "chess-colored skew diagram poset");
  g_skew->add_option("shape", gen_arg, "outer/inner, e.g. 3,3,2/1,1")->required();
  g_skew->add_option("--parity", gen_parity, "which parity class is white")
      ->check(CLI::IsMember({"top-left-white", "top-left-black"}));
  g_skew->add_option("-o,--out", gen_out, "output document")->required();
  g_skew->callback([&] {
    size_t slash = gen_arg.find('/');
    std::string outer = slash == std::string::npos ? gen_arg : gen_arg.substr(0, slash);
    std::string inner = slash == std::string::npos ? "" : gen_arg.substr(slash + 1);
    SkewShape shape = make_skew_shape(make_partition(parse_int_list(outer)),
                                      make_partition(parse_int_list(inner)));
    write_poset_result(out, gen_skew(shape, parse_parity(gen_parity)),
                       {{"generator", "skew"}, {"shape", gen_arg}, {"parity", gen_parity}},
                       gen_out);
  });

  auto* g_tree = gen->add_subcommand("tree", "seeded random forest poset");
  g_tree->add_option("n", gen_n, "element count")->required()->check(CLI::PositiveNumber);
  g_tree->add_option("--seed", gen_seed, "RNG seed")->required();
  g_tree->add_option("--coloring", gen_coloring, "random or chess")
      ->check(CLI::IsMember({"random", "chess"}));
  g_tree->add_option("-o,--out", gen_out, "output document")->required();
  g_tree->callback([&] {
    ForestColoring fc =
        gen_coloring == "chess" ? ForestColoring::Chess : ForestColoring::UniformRandom;
    write_poset_result(out, gen_random_forest(gen_n, gen_seed, fc),
                       {{"generator", "tree"}, {"n", gen_n}, {"seed", gen_seed},
                        {"coloring", gen_coloring}},
                       gen_out);
  });

  auto* g_trunc = gen->add_subcommand("truncated-square", "random corner-removal grid");
  g_trunc->add_option("side", gen_n, "array side length")->required()->check(CLI::PositiveNumber);
  g_trunc->add_option("--seed", gen_seed, "RNG seed")->required();
  g_trunc->add_option("--removals", gen_removals, "number of corner removals")
      ->check(CLI::NonNegativeNumber);
  g_trunc->add_option("--parity", gen_parity, "which parity class is white")
      ->check(CLI::IsMember({"top-left-white", "top-left-black"}));
  g_trunc->add_option("-o,--out", gen_out, "output document")->required();
  g_trunc->callback([&] {
    TruncatedSquare ts =
        gen_truncated_square(gen_n, gen_seed, gen_removals, parse_parity(gen_parity));
    json trace = json::array();
    for (auto [r, c] : ts.removed) trace.push_back({r, c});
    json meta = {{"generator", "truncated-square"}, {"side", gen_n}, {"seed", gen_seed},
                 {"removals", gen_removals}, {"parity", gen_parity},
                 {"removalTrace", std::move(trace)}};
    out << "cells=" << ts.grid.size() << "\n";
    write_document(grid_to_json(ts.grid, std::move(meta)), gen_out);
    out << "wrote=" << gen_out << "\n";
  });

  auto* g_fix = gen->add_subcommand("fixture", "named figure fixture");
  g_fix->add_option("name", gen_arg, "one of the documented fixture names")->required();
  g_fix->add_option("-o,--out", gen_out, "output document")->required();
  g_fix->callback([&] { cmd_generate_fixture(out, gen_arg, gen_out); });

  auto* exp = app.add_subcommand("export", "serialize to other formats");
  exp->require_subcommand(1);
  std::string exp_path, exp_out;
  auto* exp_dot = exp->add_subcommand("dot", "Hasse diagram in Graphviz DOT");
  exp_dot->add_option("document", exp_path, "poset JSON document")->required();
  exp_dot->add_option("-o,--out", exp_out, "output file (default stdout)");
  exp_dot->callback([&] {
    Document doc = read_document(exp_path);
    if (!doc.poset)
      throw ParseError("InvalidDocument", "dot export needs a poset document");
    std::string dot = export_dot(doc.poset.value());
    if (exp_out.empty()) {
      out << dot;
    } else {
      std::ofstream f(exp_out);
      if (!f) throw ParseError("CannotWrite", "cannot open '" + exp_out + "' for writing");
      f << dot;
      out << "wrote=" << exp_out << "\n";
    }
  });

  auto* play = app.add_subcommand("play", "interactive demo against the exact engine");
  std::string play_path, play_human, play_rule;
  bool play_force = false;
  play->add_option("document", play_path, "poset or grid JSON document")->required();
  play->add_option("--human", play_human, "side you play")
      ->required()
      ->check(CLI::IsMember({"white", "black"}));
  play->add_option("--rule", play_rule, "pomax (default) or minmax")
      ->check(CLI::IsMember({"pomax", "minmax"}));
  play->add_flag("--force", play_force, "ignore the state-space size bound");
  play->callback([&] { cmd_play(in, out, play_path, play_human, play_rule, play_force); });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  }
  return 0;
}

}  // namespace pomax
