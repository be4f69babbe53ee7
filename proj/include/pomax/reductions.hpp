#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pomax/poset.hpp"
#include "pomax/solver.hpp"

namespace pomax {

struct Literal {
  int var;  // 1-based
  bool negated;
  bool operator==(const Literal&) const = default;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;  // 1..3 literals each
};

// Prefix is implicit: strictly alternating ∀x1 ∃x2 … ∀x(n-1) ∃xn, n even.
struct QbfFormula {
  int num_vars = 0;
  CnfFormula matrix;
};

// DIMACS CNF: `c` comments, `p cnf <n> <m>` header, clauses of integers
// terminated by 0. Errors: MissingHeader, LiteralOutOfRange,
// UnterminatedClause, ClauseTooLong (>3), EmptyClause, MalformedInput.
CnfFormula parse_dimacs(const std::string& text);

// QDIMACS: quantifier lines `a … 0` / `e … 0` between header and clauses.
// Without `normalize`, any prefix other than ∀x1 ∃x2 … ∃xn is rejected
// (NonAlternatingPrefix); with it, fresh matrix-unused variables are
// inserted to restore strict alternation and even n.
QbfFormula parse_qdimacs(const std::string& text, bool normalize = false);

// First satisfying assignment in lexicographic order (x1 outermost,
// false < true), or nullopt. Bound: n ≤ 24.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f);

// Game-semantics recursion: ∀ levels need both branches, ∃ levels one.
// Bound: n ≤ 16.
bool qbf_bruteforce(const QbfFormula& f);

struct Role {
  enum Kind { Assignment, Clause, Candy, Isolated, GadgetA, GadgetB } kind;
  // Assignment: var i, value a. Clause: index i. Candy: var i, copy a.
  // Isolated: counter i. GadgetA: level i, β = a. GadgetB: level i, α = a, β = b.
  int i = 0, a = 0, b = 0;
  bool operator==(const Role&) const = default;
};
std::string to_string(const Role& role);

struct ReductionPoset {
  ColoredPoset poset;
  std::vector<Role> roles;  // parallel to element indices
};

// Per variable two white assignment elements over a black candy; per clause a
// black element covered by its falsifying assignment elements; n isolated
// black elements. Height 2.
ReductionPoset reduce_3sat(const CnfFormula& f);

// Assignment elements colored by quantifier parity, m+1 white candies per odd
// variable, one black candy per even variable, and the six-element ordering
// gadget between consecutive levels. Height 3.
ReductionPoset reduce_qbf(const QbfFormula& f);

struct ReductionReport {
  int value = 0;
  bool formula_true = false;
  bool agree = false;              // (value == 0) ⇔ formula true
  bool nonpositive = false;        // value ≤ 0
  bool white_first_loses = false;  // by independent win/loss minimax
};

ReductionReport verify_reduction_sat(const CnfFormula& f, const SolveOptions& opts = {});
ReductionReport verify_reduction_qbf(const QbfFormula& f, const SolveOptions& opts = {});

}  // namespace pomax
