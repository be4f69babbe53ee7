#pragma once

#include <cstdint>
#include <limits>

#include "pomax/rules.hpp"

namespace pomax {

enum class Outcome { WhiteWinsBoth, BlackWinsBoth, SecondPlayerWins, FirstPlayerWins };
const char* to_string(Outcome o);
// The §2 sign correspondence: >0 white, <0 black, =0 second player.
Outcome outcome_from_value(int value);

struct SolveOptions {
  // Structural certificates (forest/diagram components answered without
  // search). Off together with decompose = "oracle mode".
  bool use_shortcuts = true;
  // Solve comparability/adjacency components independently and sum.
  bool decompose = true;
  int max_ground = 28;
  bool force = false;
};

inline SolveOptions oracle_options() { return {.use_shortcuts = false, .decompose = false}; }

struct SolveStats {
  uint64_t states = 0;         // positions actually expanded
  uint64_t shortcut_hits = 0;  // components answered by a certificate
  // Smallest min(R)-max(L) seen over positions with both option types
  // (Lemma hypothesis says it is always ≥ 2).
  int min_gap = std::numeric_limits<int>::max();
};

// Exact integer value by the clamp recursion of the integer-value lemma:
// min(max(0, max(L)+1), min(R)-1) with missing sides as ±∞. Memoized on the
// present-subset key. Throws StateSpaceTooLarge past max_ground unless forced.
int game_value(const GameState& state, const SolveOptions& opts = {}, SolveStats* stats = nullptr);
// Pomax game on the full poset.
int game_value(const ColoredPoset& poset, const SolveOptions& opts = {},
               SolveStats* stats = nullptr);

// Win/loss classification by direct minimax for both starting players,
// independent of game_value.
Outcome outcome(const GameState& state, const SolveOptions& opts = {});
Outcome outcome(const ColoredPoset& poset, const SolveOptions& opts = {});

// True iff the second player wins "state ⊕ |n| free moves for the color
// opposing the sign of n" — the independent oracle for game_value.
bool verify_value(const GameState& state, int n, const SolveOptions& opts = {});
bool verify_value(const ColoredPoset& poset, int n, const SolveOptions& opts = {});

// Exact recursive balancedness check: every option balanced, and a
// monochromatic nonempty removable set implies that color holds at least
// half of the present elements.
bool is_balanced(const GameState& state, const SolveOptions& opts = {});
bool is_balanced(const ColoredPoset& poset, const SolveOptions& opts = {});

// white − black of the present set; caller certifies balancedness.
int balanced_value(const GameState& state);

// white − black restricted to the essential part; no search. NotAForest
// otherwise.
int tree_value(const ColoredPoset& poset);

// Uniformly random legal moves until someone is stuck; returns the winner
// (the player who is not stuck). Deterministic for a fixed seed.
Color random_playout(const GameState& state, Color first, uint64_t seed);

// Value-optimal move for `mover` (max value for White, min for Black),
// lowest element index on ties; -1 when there is no legal move.
int best_move(const GameState& state, Color mover, const SolveOptions& opts = {});

}  // namespace pomax
