#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pomax/cli.hpp"
#include "pomax/generators.hpp"
#include "pomax/io.hpp"
#include "pomax/rules.hpp"

using namespace pomax;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp_dir() {
  auto d = std::filesystem::temp_directory_path() / "pomax_cli_tests";
  std::filesystem::create_directories(d);
  return d;
}

std::string tmp_path(const char* name) { return (tmp_dir() / name).string(); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve and analyze a fixture") {
  std::string intro = tmp_path("intro.json");
  CliResult gen = run({"generate", "fixture", "intro_poset", "-o", intro});
  REQUIRE(gen.code == 0);
  CHECK(contains(gen.out, "elements=4"));

  CliResult solve = run({"solve", intro});
  CHECK(solve.code == 0);
  CHECK(contains(solve.out, "value=0\n"));
  CHECK(contains(solve.out, "outcome=SecondPlayerWins\n"));

  std::string chain = tmp_path("fig3.json");
  REQUIRE(run({"generate", "fixture", "fig3_chain", "-o", chain}).code == 0);
  CliResult analyze = run({"analyze", chain});
  CHECK(analyze.code == 0);
  CHECK(contains(analyze.out, "blocking_triples=1\n"));
  CHECK(contains(analyze.out, "triple=e3<e4<e5\n"));
  CHECK(contains(analyze.out, "essential_part=e4,e5,e6,e7\n"));
  CHECK(contains(analyze.out, "tree_value=0\n"));

  CliResult mm = run({"solve", chain, "--rule", "minmax"});
  CHECK(mm.code == 0);
  CHECK(contains(mm.out, "value=-1\n"));
  CliResult mm2 = run({"solve", chain, "--rule", "minmax", "--no-shortcuts"});
  CHECK(contains(mm2.out, "value=-1\n"));
}

TEST_CASE("shortcut and plain solves print the same value") {
  std::string young = tmp_path("young.json");
  REQUIRE(run({"generate", "young", "4,3,1", "-o", young}).code == 0);
  CliResult fast = run({"solve", young});
  CliResult slow = run({"solve", young, "--no-shortcuts"});
  CHECK(fast.code == 0);
  CHECK(slow.code == 0);
  CHECK(fast.out.substr(0, fast.out.find('\n')) == slow.out.substr(0, slow.out.find('\n')));
}

TEST_CASE("exit codes follow the error families") {
  CHECK(run({"solve", tmp_path("missing.json")}).code == 2);

  std::string bad = tmp_path("bad.json");
  write_text(bad, R"({"elements":[{"id":"a","color":"red"}]})");
  CHECK(run({"solve", bad}).code == 2);

  std::string cyc = tmp_path("cyc.json");
  write_text(cyc, R"({"elements":[{"id":"a","color":"white"}],"covers":[["a","a"]]})");
  CHECK(run({"solve", cyc}).code == 3);

  std::string fig5 = tmp_path("fig5.json");
  REQUIRE(run({"generate", "fixture", "fig5_qbf_poset", "-o", fig5}).code == 0);
  CliResult bounded = run({"solve", fig5});
  CHECK(bounded.code == 4);
  CHECK(contains(bounded.err, "StateSpaceTooLarge"));
  CliResult forced = run({"solve", fig5, "--force"});
  CHECK(forced.code == 0);
  CHECK(contains(forced.out, "value=0\n"));

  CHECK(run({"generate", "fixture", "nope", "-o", tmp_path("x.json")}).code == 3);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"generate", "young", "3,4", "-o", tmp_path("y.json")}).code == 3);
  CHECK(run({"generate", "young", "a,b", "-o", tmp_path("y.json")}).code == 2);
  CHECK(run({"generate", "tree", "5", "-o", tmp_path("t.json")}).code == 2);  // --seed required
}

TEST_CASE("reduction pipeline") {
  std::string cnf = tmp_path("fig4.cnf");
  write_text(cnf, "c example\np cnf 3 2\n1 2 -3 0\n-1 2 3 0\n");
  std::string poset = tmp_path("fig4_poset.json");
  CliResult red = run({"reduce", "sat", cnf, "-o", poset});
  CHECK(red.code == 0);
  CHECK(contains(red.out, "elements=14\n"));
  CHECK(contains(red.out, "height=2\n"));

  Document doc = read_document(poset);
  REQUIRE(doc.poset.has_value());
  CHECK(doc.metadata.at("roleMap").at("x1=0") == "Assignment(1,0)");
  CHECK(doc.metadata.at("roleMap").at("iso2") == "Isolated(2)");

  CliResult ver = run({"verify-reduction", "sat", cnf});
  CHECK(ver.code == 0);
  CHECK(contains(ver.out, "value=0\n"));
  CHECK(contains(ver.out, "sat=true\n"));
  CHECK(contains(ver.out, "agree=yes\n"));
  CHECK(contains(ver.out, "white_first_loses=yes\n"));

  std::string qd = tmp_path("q.qdimacs");
  write_text(qd, "p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n");
  CliResult vq = run({"verify-reduction", "qbf", qd});
  CHECK(vq.code == 0);
  CHECK(contains(vq.out, "qbf=true\n"));
  CHECK(contains(vq.out, "agree=yes\n"));
  CHECK(contains(vq.out, "nonpositive=yes\n"));

  std::string skew = tmp_path("e.qdimacs");
  write_text(skew, "p cnf 1 1\ne 1 0\n1 0\n");
  CHECK(run({"reduce", "qbf", skew, "-o", tmp_path("eq.json")}).code == 2);
  CliResult norm = run({"reduce", "qbf", skew, "--normalize", "-o", tmp_path("eq.json")});
  CHECK(norm.code == 0);
  CHECK(contains(norm.out, "elements=14\n"));
}

TEST_CASE("grid documents use the corner rule") {
  std::string fig6 = tmp_path("fig6.json");
  REQUIRE(run({"generate", "fixture", "fig6_truncated", "-o", fig6}).code == 0);
  CliResult an = run({"analyze", fig6});
  CHECK(an.code == 0);
  CHECK(contains(an.out, "cells=24\n"));
  CHECK(contains(an.out, "corners=11\n"));
  CliResult solve = run({"solve", fig6});
  CHECK(solve.code == 0);
  CHECK(contains(solve.out, "value=-2\n"));
  CHECK(run({"solve", fig6, "--rule", "minmax"}).code == 2);
  CHECK(run({"export", "dot", fig6}).code == 2);
}

TEST_CASE("dot export matches the library output") {
  std::string intro = tmp_path("intro_dot.json");
  REQUIRE(run({"generate", "fixture", "intro_poset", "-o", intro}).code == 0);
  CliResult dot = run({"export", "dot", intro});
  CHECK(dot.code == 0);
  CHECK(dot.out == export_dot(*read_document(intro).poset));
}

TEST_CASE("scripted play transcripts replay cleanly") {
  std::string intro = tmp_path("intro_play.json");
  REQUIRE(run({"generate", "fixture", "intro_poset", "-o", intro}).code == 0);

  CliResult game = run({"play", intro, "--human", "white"}, "w\nbogus\nx\n");
  CHECK(game.code == 0);
  CHECK(contains(game.out, "illegal move 'bogus'"));
  CHECK(contains(game.out, "loser=white\n"));
  CHECK(contains(game.out, "winner=black\n"));

  // replay every removal through apply_move; players must alternate W,B,W,...
  Document doc = read_document(intro);
  GameState st = initial_state(RemovalRule::pomax(*doc.poset));
  Color mover = Color::White;
  std::istringstream lines(game.out);
  std::string line;
  int moves = 0;
  while (std::getline(lines, line)) {
    std::string lab;
    // echoed human moves carry the "> " prompt prefix, so search anywhere
    if (auto p = line.find("you remove "); p != std::string::npos)
      lab = line.substr(p + 11);
    else if (auto q = line.find("engine removes "); q != std::string::npos)
      lab = line.substr(q + 15);
    else
      continue;
    int idx = st.rule.index_of(lab);
    REQUIRE(idx >= 0);
    CHECK(st.rule.color(idx) == mover);
    CHECK(legal_moves(st, mover).test(idx));
    st = apply_move(st, idx);
    mover = opposite(mover);
    ++moves;
  }
  CHECK(moves == 4);
  CHECK(legal_moves(st, mover).none());  // the announced loser is indeed stuck

  CliResult quit = run({"play", intro, "--human", "white"}, "quit\n");
  CHECK(quit.code == 0);
  CHECK(contains(quit.out, "aborted=quit"));
  CliResult eof = run({"play", intro, "--human", "white"}, "");
  CHECK(eof.code == 0);
  CHECK(contains(eof.out, "aborted=end-of-input"));
}

TEST_CASE("play on a small grid") {
  std::string grid = tmp_path("grid22.json");
  REQUIRE(run({"generate", "truncated-square", "2", "--seed", "1", "-o", grid}).code == 0);
  CliResult game = run({"play", grid, "--human", "black"}, "r1c2\nr2c1\n");
  CHECK(game.code == 0);
  CHECK(contains(game.out, "rule=corner\n"));
  CHECK(contains(game.out, "loser=white\n"));
}

TEST_CASE("generated young documents solve to their color difference") {
  std::string y = tmp_path("y22.json");
  REQUIRE(run({"generate", "young", "2,2", "-o", y}).code == 0);
  CHECK(contains(run({"solve", y}).out, "value=0\n"));
  std::string big = tmp_path("y54331.json");
  REQUIRE(run({"generate", "young", "5,4,3,3,1", "--parity", "top-left-black", "-o", big})
              .code == 0);
  CHECK(contains(run({"solve", big}).out, "value=-2\n"));
}

}  // TEST_SUITE
