#include "pomax/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "pomax/errors.hpp"
#include "pomax/rules.hpp"

namespace pomax {

namespace {

struct Lines {
  std::vector<std::vector<std::string>> rows;  // tokenized, comments dropped
};

Lines tokenize(const std::string& text) {
  Lines out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c' &&
        (first + 1 == line.size() || std::isspace(static_cast<unsigned char>(line[first + 1]))))
      continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.rows.push_back(std::move(toks));
  }
  return out;
}

int parse_int(const std::string& tok) {
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("MalformedInput", "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError("MalformedInput", "expected an integer, got '" + tok + "'");
  return v;
}

// Header row must be `p cnf <n> <m>`; returns (n, m).
std::pair<int, int> parse_header(const std::vector<std::string>& row) {
  if (row.size() != 4 || row[0] != "p" || row[1] != "cnf")
    throw ParseError("MissingHeader", "expected header 'p cnf <vars> <clauses>'");
  int n = parse_int(row[2]);
  int m = parse_int(row[3]);
  if (n < 0 || m < 0)
    throw ParseError("MalformedInput", "header counts must be nonnegative");
  return {n, m};
}

void push_literal(CnfFormula& f, std::vector<Literal>& cur, int v) {
  if (v == 0) {
    if (cur.empty()) throw ParseError("EmptyClause", "clause with no literals");
    f.clauses.push_back(cur);
    cur.clear();
    return;
  }
  int var = v > 0 ? v : -v;
  if (var > f.num_vars)
    throw ParseError("LiteralOutOfRange",
                     "literal " + std::to_string(v) + " exceeds declared " +
                         std::to_string(f.num_vars) + " variables");
  if (cur.size() == 3)
    throw ParseError("ClauseTooLong", "clause has more than 3 literals");
  cur.push_back({var, v < 0});
}

bool clause_satisfied(const std::vector<Literal>& cl, const std::vector<bool>& a) {
  for (const Literal& lit : cl)
    if (a[lit.var - 1] == !lit.negated) return true;
  return false;
}

bool all_satisfied(const CnfFormula& f, const std::vector<bool>& a) {
  for (const auto& cl : f.clauses)
    if (!clause_satisfied(cl, a)) return false;
  return true;
}

std::string assign_label(int var, int val) {
  return "x" + std::to_string(var) + "=" + std::to_string(val);
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  Lines lines = tokenize(text);
  CnfFormula f;
  bool have_header = false;
  std::vector<Literal> cur;
  for (const auto& row : lines.rows) {
    if (!have_header) {
      auto [n, m] = parse_header(row);
      f.num_vars = n;
      (void)m;  // declared clause count is advisory
      have_header = true;
      continue;
    }
    if (row[0] == "p")
      throw ParseError("MalformedInput", "duplicate header line");
    for (const auto& tok : row) push_literal(f, cur, parse_int(tok));
  }
  if (!have_header) throw ParseError("MissingHeader", "no 'p cnf' header found");
  if (!cur.empty())
    throw ParseError("UnterminatedClause", "input ended inside a clause (missing 0)");
  return f;
}

QbfFormula parse_qdimacs(const std::string& text, bool normalize) {
  Lines lines = tokenize(text);
  CnfFormula matrix;
  std::vector<std::pair<char, int>> prefix;  // ('a' or 'e', variable)
  std::vector<bool> quantified;
  bool have_header = false;
  bool in_clauses = false;
  std::vector<Literal> cur;
  for (const auto& row : lines.rows) {
    if (!have_header) {
      auto [n, m] = parse_header(row);
      matrix.num_vars = n;
      (void)m;
      quantified.assign(n + 1, false);
      have_header = true;
      continue;
    }
    if (row[0] == "p") throw ParseError("MalformedInput", "duplicate header line");
    if (row[0] == "a" || row[0] == "e") {
      if (in_clauses)
        throw ParseError("MalformedInput", "quantifier line after first clause");
      if (row.size() < 2 || row.back() != "0")
        throw ParseError("MalformedInput", "quantifier line must end with 0");
      for (size_t k = 1; k + 1 < row.size(); ++k) {
        int v = parse_int(row[k]);
        if (v < 1 || v > matrix.num_vars)
          throw ParseError("LiteralOutOfRange",
                           "quantified variable " + row[k] + " out of range");
        if (quantified[v])
          throw ParseError("MalformedInput",
                           "variable " + row[k] + " quantified twice");
        quantified[v] = true;
        prefix.emplace_back(row[0][0], v);
      }
      continue;
    }
    in_clauses = true;
    for (const auto& tok : row) push_literal(matrix, cur, parse_int(tok));
  }
  if (!have_header) throw ParseError("MissingHeader", "no 'p cnf' header found");
  if (!cur.empty())
    throw ParseError("UnterminatedClause", "input ended inside a clause (missing 0)");

  std::vector<bool> used(matrix.num_vars + 1, false);
  for (const auto& cl : matrix.clauses)
    for (const Literal& lit : cl) used[lit.var] = true;
  for (int v = 1; v <= matrix.num_vars; ++v)
    if (used[v] && !quantified[v])
      throw ParseError("UnquantifiedVariable",
                       "variable " + std::to_string(v) + " appears unquantified");

  if (!normalize) {
    bool strict = static_cast<int>(prefix.size()) == matrix.num_vars &&
                  matrix.num_vars % 2 == 0;
    if (strict)
      for (size_t t = 0; t < prefix.size(); ++t)
        if (prefix[t].second != static_cast<int>(t) + 1 ||
            prefix[t].first != (t % 2 == 0 ? 'a' : 'e'))
          strict = false;
    if (!strict)
      throw ParseError("NonAlternatingPrefix",
                       "prefix is not strictly alternating ∀x1 ∃x2 …; "
                       "pass normalize to repair it");
    QbfFormula f;
    f.num_vars = matrix.num_vars;
    f.matrix = std::move(matrix);
    return f;
  }

  // Rebuild a strictly alternating prefix, inserting fresh dummy variables
  // wherever the quantifier run breaks, then renumber the matrix.
  std::vector<int> newpos(matrix.num_vars + 1, 0);
  int slots = 0;
  char expect = 'a';
  for (auto [q, v] : prefix) {
    if (q != expect) {
      ++slots;  // dummy of quantifier `expect`
      expect = expect == 'a' ? 'e' : 'a';
    }
    newpos[v] = ++slots;
    expect = expect == 'a' ? 'e' : 'a';
  }
  if (slots % 2 == 1) ++slots;  // trailing ∃ dummy
  QbfFormula f;
  f.num_vars = slots;
  f.matrix.num_vars = slots;
  for (const auto& cl : matrix.clauses) {
    std::vector<Literal> mapped;
    for (const Literal& lit : cl) mapped.push_back({newpos[lit.var], lit.negated});
    f.matrix.clauses.push_back(std::move(mapped));
  }
  return f;
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f) {
  if (f.num_vars > 24)
    throw BoundError("FormulaTooLarge",
                     "sat_bruteforce handles at most 24 variables, got " +
                         std::to_string(f.num_vars));
  const int n = f.num_vars;
  std::vector<bool> a(n, false);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) a[i] = (mask >> (n - 1 - i)) & 1;
    if (all_satisfied(f, a)) return a;
  }
  return std::nullopt;
}

namespace {

bool qbf_rec(const QbfFormula& f, std::vector<bool>& vals, int i) {
  if (i > f.num_vars) return all_satisfied(f.matrix, vals);
  bool universal = i % 2 == 1;
  vals[i - 1] = false;
  bool lo = qbf_rec(f, vals, i + 1);
  if (universal && !lo) return false;
  if (!universal && lo) return true;
  vals[i - 1] = true;
  return qbf_rec(f, vals, i + 1);
}

}  // namespace

bool qbf_bruteforce(const QbfFormula& f) {
  if (f.num_vars > 16)
    throw BoundError("FormulaTooLarge",
                     "qbf_bruteforce handles at most 16 variables, got " +
                         std::to_string(f.num_vars));
  if (f.num_vars % 2 != 0)
    throw ValidationError("OddPrefix", "alternating prefix needs an even variable count");
  std::vector<bool> vals(f.num_vars, false);
  return qbf_rec(f, vals, 1);
}

std::string to_string(const Role& role) {
  switch (role.kind) {
    case Role::Assignment:
      return "Assignment(" + std::to_string(role.i) + "," + std::to_string(role.a) + ")";
    case Role::Clause:
      return "Clause(" + std::to_string(role.i) + ")";
    case Role::Candy:
      return "Candy(" + std::to_string(role.i) + "," + std::to_string(role.a) + ")";
    case Role::Isolated:
      return "Isolated(" + std::to_string(role.i) + ")";
    case Role::GadgetA:
      return "GadgetA(" + std::to_string(role.i) + "," + std::to_string(role.a) + ")";
    case Role::GadgetB:
      return "GadgetB(" + std::to_string(role.i) + "," + std::to_string(role.a) + "," +
             std::to_string(role.b) + ")";
  }
  return "?";
}

ReductionPoset reduce_3sat(const CnfFormula& f) {
  const int n = f.num_vars;
  std::vector<std::pair<std::string, Color>> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<Role> roles;
  auto add = [&](std::string lab, Color c, Role r) {
    elems.emplace_back(std::move(lab), c);
    roles.push_back(r);
  };
  for (int i = 1; i <= n; ++i) {
    add(assign_label(i, 0), Color::White, {Role::Assignment, i, 0});
    add(assign_label(i, 1), Color::White, {Role::Assignment, i, 1});
    std::string candy = "candy" + std::to_string(i) + "_1";
    covers.emplace_back(candy, assign_label(i, 0));
    covers.emplace_back(candy, assign_label(i, 1));
    add(std::move(candy), Color::Black, {Role::Candy, i, 1});
  }
  for (size_t j = 0; j < f.clauses.size(); ++j) {
    std::string cl = "c" + std::to_string(j + 1);
    std::set<std::string> falsifiers;  // duplicated pad literals collapse here
    for (const Literal& lit : f.clauses[j])
      falsifiers.insert(assign_label(lit.var, lit.negated ? 1 : 0));
    for (const auto& lab : falsifiers) covers.emplace_back(cl, lab);
    add(std::move(cl), Color::Black, {Role::Clause, static_cast<int>(j + 1)});
  }
  for (int t = 1; t <= n; ++t)
    add("iso" + std::to_string(t), Color::Black, {Role::Isolated, t});
  return {build_poset(elems, covers), std::move(roles)};
}

ReductionPoset reduce_qbf(const QbfFormula& f) {
  const int n = f.num_vars;
  const int m = static_cast<int>(f.matrix.clauses.size());
  if (n % 2 != 0)
    throw ValidationError("OddPrefix", "alternating prefix needs an even variable count");
  std::vector<std::pair<std::string, Color>> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<Role> roles;
  auto add = [&](std::string lab, Color c, Role r) {
    elems.emplace_back(std::move(lab), c);
    roles.push_back(r);
  };
  for (int i = 1; i <= n; ++i) {
    bool odd = i % 2 == 1;
    Color ac = odd ? Color::Black : Color::White;
    add(assign_label(i, 0), ac, {Role::Assignment, i, 0});
    add(assign_label(i, 1), ac, {Role::Assignment, i, 1});
    int copies = odd ? m + 1 : 1;
    Color cc = odd ? Color::White : Color::Black;
    for (int k = 1; k <= copies; ++k) {
      std::string candy = "candy" + std::to_string(i) + "_" + std::to_string(k);
      covers.emplace_back(candy, assign_label(i, 0));
      covers.emplace_back(candy, assign_label(i, 1));
      add(std::move(candy), cc, {Role::Candy, i, k});
    }
  }
  for (int j = 1; j <= m; ++j) {
    std::string cl = "c" + std::to_string(j);
    std::set<std::string> falsifiers;
    for (const Literal& lit : f.matrix.clauses[j - 1])
      falsifiers.insert(assign_label(lit.var, lit.negated ? 1 : 0));
    for (const auto& lab : falsifiers) covers.emplace_back(cl, lab);
    add(std::move(cl), Color::Black, {Role::Clause, j});
  }
  for (int i = 1; i < n; ++i) {
    bool odd = i % 2 == 1;
    std::string si = std::to_string(i);
    for (int beta = 0; beta <= 1; ++beta) {
      std::string a = "a" + si + "^" + std::to_string(beta);
      covers.emplace_back(a, assign_label(i + 1, beta));
      add(std::move(a), odd ? Color::Black : Color::White, {Role::GadgetA, i, beta});
    }
    for (int alpha = 0; alpha <= 1; ++alpha)
      for (int beta = 0; beta <= 1; ++beta) {
        std::string b = "b" + si + "^" + std::to_string(alpha) + std::to_string(beta);
        covers.emplace_back(b, "a" + si + "^" + std::to_string(beta));
        covers.emplace_back(b, assign_label(i, alpha));
        add(std::move(b), odd ? Color::White : Color::Black, {Role::GadgetB, i, alpha, beta});
      }
  }
  return {build_poset(elems, covers), std::move(roles)};
}

namespace {

ReductionReport make_report(const ColoredPoset& p, bool truth, const SolveOptions& opts) {
  ReductionReport rep;
  GameState s = initial_state(RemovalRule::pomax(p));
  rep.value = game_value(s, opts);
  rep.formula_true = truth;
  rep.agree = (rep.value == 0) == truth;
  rep.nonpositive = rep.value <= 0;
  Outcome oc = outcome(s, opts);
  rep.white_first_loses = oc == Outcome::BlackWinsBoth || oc == Outcome::SecondPlayerWins;
  return rep;
}

}  // namespace

ReductionReport verify_reduction_sat(const CnfFormula& f, const SolveOptions& opts) {
  return make_report(reduce_3sat(f).poset, sat_bruteforce(f).has_value(), opts);
}

ReductionReport verify_reduction_qbf(const QbfFormula& f, const SolveOptions& opts) {
  return make_report(reduce_qbf(f).poset, qbf_bruteforce(f), opts);
}

}  // namespace pomax
