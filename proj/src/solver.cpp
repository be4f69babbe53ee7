#include "pomax/solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "pomax/errors.hpp"

namespace pomax {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::WhiteWinsBoth: return "WhiteWinsBoth";
    case Outcome::BlackWinsBoth: return "BlackWinsBoth";
    case Outcome::SecondPlayerWins: return "SecondPlayerWins";
    case Outcome::FirstPlayerWins: return "FirstPlayerWins";
  }
  return "?";
}

Outcome outcome_from_value(int value) {
  if (value > 0) return Outcome::WhiteWinsBoth;
  if (value < 0) return Outcome::BlackWinsBoth;
  return Outcome::SecondPlayerWins;
}

namespace {

void check_bound(const RemovalRule& rule, const SolveOptions& opts) {
  if (!opts.force && rule.ground_size() > opts.max_ground)
    throw BoundError("StateSpaceTooLarge",
                     "ground has " + std::to_string(rule.ground_size()) + " elements (bound " +
                         std::to_string(opts.max_ground) + "); pass force to solve anyway");
}

class ValueSolver {
 public:
  ValueSolver(const RemovalRule& rule, const SolveOptions& opts, SolveStats* stats)
      : rule_(rule), opts_(opts), stats_(stats) {
    const int n = rule.ground_size();
    nbr_.reserve(size_t(n));
    switch (rule.kind()) {
      case RuleKind::Pomax:
      case RuleKind::MinMax:
        for (int i = 0; i < n; ++i) nbr_.push_back(rule.poset().above(i) | rule.poset().below(i));
        break;
      case RuleKind::Leaf:
        for (int i = 0; i < n; ++i) {
          SubsetBits m(n);
          for (int j : rule.tree().adj[size_t(i)]) m.set(j);
          nbr_.push_back(std::move(m));
        }
        break;
      case RuleKind::Corner:
        for (int i = 0; i < n; ++i) {
          SubsetBits m(n);
          auto [r, c] = rule.grid().cells[size_t(i)];
          for (int d : {-1, 1}) {
            int j = rule.grid().cell_index(r, c + d);
            if (j >= 0) m.set(j);
            j = rule.grid().cell_index(r + d, c);
            if (j >= 0) m.set(j);
          }
          nbr_.push_back(std::move(m));
        }
        break;
    }
  }

  int value(const SubsetBits& present) {
    if (present.none()) return 0;
    if (auto it = memo_.find(present); it != memo_.end()) return it->second;
    int v = 0;
    bool split = false;
    if (opts_.decompose) {
      auto comps = components(present);
      if (comps.size() > 1) {
        split = true;
        for (const auto& c : comps) v += value(c);
      }
    }
    if (!split) v = component_value(present);
    memo_.emplace(present, v);
    return v;
  }

 private:
  std::vector<SubsetBits> components(const SubsetBits& present) const {
    std::vector<SubsetBits> out;
    SubsetBits left = present;
    std::vector<int> stack;
    while (left.any()) {
      int seed = -1;
      left.for_each([&](int i) {
        if (seed < 0) seed = i;
      });
      SubsetBits comp(present.universe());
      comp.set(seed);
      left.reset(seed);
      stack.assign(1, seed);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        (nbr_[size_t(v)] & left).for_each([&](int u) {
          comp.set(u);
          left.reset(u);
          stack.push_back(u);
        });
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  int component_value(const SubsetBits& c) {
    if (opts_.use_shortcuts) {
      if (auto v = certificate(c)) {
        if (stats_) ++stats_->shortcut_hits;
        return *v;
      }
    }
    return expand(c);
  }

  int expand(const SubsetBits& c) {
    if (stats_) ++stats_->states;
    SubsetBits rem = rule_.removable(c);
    bool has_lo = false, has_hi = false;
    int max_l = 0, min_r = 0;
    rem.for_each([&](int e) {
      SubsetBits child = c;
      child.reset(e);
      int cv = value(child);
      if (rule_.color(e) == Color::White) {
        max_l = has_lo ? std::max(max_l, cv) : cv;
        has_lo = true;
      } else {
        min_r = has_hi ? std::min(min_r, cv) : cv;
        has_hi = true;
      }
    });
    if (has_lo && has_hi) {
      int gap = min_r - max_l;
      if (stats_) stats_->min_gap = std::min(stats_->min_gap, gap);
      if (gap < 2)
        throw std::logic_error("option gap below 2 at a solved position; integer-value lemma violated");
      return std::min(std::max(0, max_l + 1), min_r - 1);
    }
    if (has_lo) return std::max(0, max_l + 1);
    if (has_hi) return std::min(0, min_r - 1);
    return 0;
  }

  // Certified component answers (see the README shortcut table). Sound for
  // any subset that passes the structural checks, not just reachable ones;
  // the acceptance suite cross-checks each branch against plain search.
  std::optional<int> certificate(const SubsetBits& c) {
    if (rule_.kind() == RuleKind::Pomax) {
      if (induced_forest(c)) return tree_value(rule_.poset().induced(c));
      if (rule_.poset().diagram_kind() == DiagramKind::Young && down_closed(c) &&
          induced_bt_free(c)) {
        auto [w, b] = rule_.color_counts(c);
        return w - b;
      }
    } else if (rule_.kind() == RuleKind::MinMax) {
      if (induced_forest(c)) {
        if (induced_bt_free(c)) {
          auto [w, b] = rule_.color_counts(c);
          return w - b;
        }
        return std::nullopt;  // forest with blocking triples: no minmax result
      }
      if (rule_.poset().diagram_kind() != DiagramKind::None && skew_shape(c) &&
          induced_bt_free(c)) {
        auto [w, b] = rule_.color_counts(c);
        return w - b;
      }
    }
    return std::nullopt;
  }

  bool induced_forest(const SubsetBits& c) const {
    const ColoredPoset& p = rule_.poset();
    bool ok = true;
    c.for_each([&](int j) {
      if (!ok) return;
      int covers = 0;
      (p.below(j) & c).for_each([&](int i) {
        if (covers > 1) return;
        if (!(p.above(i) & p.below(j)).intersects(c)) ++covers;
      });
      if (covers > 1) ok = false;
    });
    return ok;
  }

  bool down_closed(const SubsetBits& c) const {
    const ColoredPoset& p = rule_.poset();
    bool ok = true;
    c.for_each([&](int v) {
      if (ok && !p.below(v).is_subset_of(c)) ok = false;
    });
    return ok;
  }

  // Rows are intervals with weakly decreasing endpoints, nonempty rows
  // contiguous: the cell set is then order-isomorphic to a skew diagram.
  bool skew_shape(const SubsetBits& c) const {
    const auto& coords = rule_.poset().coords();
    std::map<int, std::tuple<int, int, int>> rows;  // row -> (min, max, count)
    c.for_each([&](int v) {
      auto [r, col] = coords[size_t(v)];
      auto it = rows.find(r);
      if (it == rows.end()) {
        rows.emplace(r, std::tuple{col, col, 1});
      } else {
        auto& [lo, hi, cnt] = it->second;
        lo = std::min(lo, col);
        hi = std::max(hi, col);
        ++cnt;
      }
    });
    int prev_row = -1, prev_lo = 0, prev_hi = 0;
    for (const auto& [r, t] : rows) {
      auto [lo, hi, cnt] = t;
      if (cnt != hi - lo + 1) return false;  // gap inside the row
      if (prev_row >= 0) {
        if (r != prev_row + 1) return false;            // empty row between
        if (lo > prev_lo || hi > prev_hi) return false;  // endpoints must not grow
      }
      prev_row = r;
      prev_lo = lo;
      prev_hi = hi;
    }
    return true;
  }

  bool induced_bt_free(const SubsetBits& c) const {
    return rule_.poset().induced(c).blocking_triples().empty();
  }

  const RemovalRule& rule_;
  const SolveOptions& opts_;
  SolveStats* stats_;
  std::vector<SubsetBits> nbr_;
  std::unordered_map<SubsetBits, int, SubsetHash> memo_;
};

// Win/loss minimax with optional free moves for one side (the verify_value
// composite). mover loses when completely stuck.
class WinSolver {
 public:
  WinSolver(const RemovalRule& rule, Color free_color) : rule_(rule), free_color_(free_color) {}

  bool win(const SubsetBits& present, int free_left, Color mover) {
    Key key{present, free_left * 2 + (mover == Color::White ? 0 : 1)};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool won = false;
    if (free_left > 0 && mover == free_color_ && !win(present, free_left - 1, opposite(mover)))
      won = true;
    if (!won) {
      SubsetBits rem = rule_.removable(present);
      bool stop = false;
      rem.for_each([&](int e) {
        if (stop || rule_.color(e) != mover) return;
        SubsetBits child = present;
        child.reset(e);
        if (!win(child, free_left, opposite(mover))) {
          won = true;
          stop = true;
        }
      });
    }
    memo_.emplace(key, won);
    return won;
  }

 private:
  struct Key {
    SubsetBits present;
    int aux;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const { return k.present.hash() * 1000003u + size_t(k.aux); }
  };

  const RemovalRule& rule_;
  Color free_color_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace

int game_value(const GameState& state, const SolveOptions& opts, SolveStats* stats) {
  check_bound(state.rule, opts);
  ValueSolver s(state.rule, opts, stats);
  return s.value(state.present);
}

int game_value(const ColoredPoset& poset, const SolveOptions& opts, SolveStats* stats) {
  return game_value(initial_state(RemovalRule::pomax(poset)), opts, stats);
}

Outcome outcome(const GameState& state, const SolveOptions& opts) {
  check_bound(state.rule, opts);
  WinSolver s(state.rule, Color::White);
  bool white_first = s.win(state.present, 0, Color::White);
  bool black_first = s.win(state.present, 0, Color::Black);
  if (white_first && black_first) return Outcome::FirstPlayerWins;
  if (white_first) return Outcome::WhiteWinsBoth;
  if (black_first) return Outcome::BlackWinsBoth;
  return Outcome::SecondPlayerWins;
}

Outcome outcome(const ColoredPoset& poset, const SolveOptions& opts) {
  return outcome(initial_state(RemovalRule::pomax(poset)), opts);
}

bool verify_value(const GameState& state, int n, const SolveOptions& opts) {
  check_bound(state.rule, opts);
  Color free_color = n >= 0 ? Color::Black : Color::White;
  int free_moves = n >= 0 ? n : -n;
  WinSolver s(state.rule, free_color);
  return !s.win(state.present, free_moves, Color::White) &&
         !s.win(state.present, free_moves, Color::Black);
}

bool verify_value(const ColoredPoset& poset, int n, const SolveOptions& opts) {
  return verify_value(initial_state(RemovalRule::pomax(poset)), n, opts);
}

bool is_balanced(const GameState& state, const SolveOptions& opts) {
  check_bound(state.rule, opts);
  std::unordered_map<SubsetBits, bool, SubsetHash> memo;
  std::function<bool(const SubsetBits&)> bal = [&](const SubsetBits& present) -> bool {
    if (present.none()) return true;
    if (auto it = memo.find(present); it != memo.end()) return it->second;
    bool ok = true;
    SubsetBits rem = state.rule.removable(present);
    if (rem.any()) {
      auto [rw, rb] = state.rule.color_counts(rem);
      if (rw == 0 || rb == 0) {
        Color mono = rw > 0 ? Color::White : Color::Black;
        auto [w, b] = state.rule.color_counts(present);
        int have = mono == Color::White ? w : b;
        if (2 * have < w + b) ok = false;
      }
      if (ok) {
        bool stop = false;
        rem.for_each([&](int e) {
          if (stop) return;
          SubsetBits child = present;
          child.reset(e);
          if (!bal(child)) {
            ok = false;
            stop = true;
          }
        });
      }
    }
    memo.emplace(present, ok);
    return ok;
  };
  return bal(state.present);
}

bool is_balanced(const ColoredPoset& poset, const SolveOptions& opts) {
  return is_balanced(initial_state(RemovalRule::pomax(poset)), opts);
}

int balanced_value(const GameState& state) {
  auto [w, b] = state.rule.color_counts(state.present);
  return w - b;
}

int tree_value(const ColoredPoset& poset) {
  SubsetBits ess = poset.essential_part();
  auto [w, b] = poset.color_counts(ess);
  return w - b;
}

Color random_playout(const GameState& state, Color first, uint64_t seed) {
  std::mt19937_64 rng(seed);
  SubsetBits present = state.present;
  Color mover = first;
  while (true) {
    SubsetBits rem = state.rule.removable(present);
    std::vector<int> moves;
    rem.for_each([&](int e) {
      if (state.rule.color(e) == mover) moves.push_back(e);
    });
    if (moves.empty()) return opposite(mover);
    std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
    present.reset(moves[pick(rng)]);
    mover = opposite(mover);
  }
}

int best_move(const GameState& state, Color mover, const SolveOptions& opts) {
  check_bound(state.rule, opts);
  ValueSolver solver(state.rule, opts, nullptr);
  int best = -1, best_value = 0;
  legal_moves(state, mover).for_each([&](int e) {
    SubsetBits child = state.present;
    child.reset(e);
    int v = solver.value(child);
    if (best < 0 || (mover == Color::White ? v > best_value : v < best_value)) {
      best = e;
      best_value = v;
    }
  });
  return best;
}

}  // namespace pomax
