#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pomax/poset.hpp"

namespace pomax {

// Vertex-colored tree in the graph-theoretical sense; ground of the leaf rule.
struct TreeGraph {
  std::vector<std::string> labels;
  std::vector<Color> colors;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  int size() const { return int(labels.size()); }
};

// Validates connectivity and acyclicity (ValidationError NotATree).
TreeGraph make_tree_graph(std::vector<std::pair<std::string, Color>> vertices,
                          std::vector<std::pair<int, int>> edges);

// Colored subset of an n×n cell array; ground of the corner rule.
// Cells are (row, col), 1-based, kept sorted; neighbors share a side.
struct Grid {
  int side = 0;
  std::vector<std::pair<int, int>> cells;
  std::vector<Color> colors;

  int size() const { return int(cells.size()); }
  int cell_index(int row, int col) const;
  std::string cell_label(int i) const;
};

Grid make_grid(int side, std::vector<std::pair<std::pair<int, int>, Color>> cells);

enum class RuleKind { Pomax, MinMax, Leaf, Corner };
const char* rule_name(RuleKind k);

// A removability function ρ bound to its ground structure. Immutable and
// cheap to copy (grounds are shared).
class RemovalRule {
 public:
  static RemovalRule pomax(ColoredPoset p) { return RemovalRule(RuleKind::Pomax, std::move(p)); }
  static RemovalRule minmax(ColoredPoset p) { return RemovalRule(RuleKind::MinMax, std::move(p)); }
  static RemovalRule leaf(TreeGraph t);
  static RemovalRule corner(Grid g);

  RuleKind kind() const { return kind_; }
  int ground_size() const;
  Color color(int i) const;
  std::string label(int i) const;
  int index_of(const std::string& label) const;  // -1 if absent
  std::pair<int, int> color_counts(const SubsetBits& present) const;

  // Throw RuleGroundMismatch when the rule is built on a different ground.
  const ColoredPoset& poset() const;
  const TreeGraph& tree() const;
  const Grid& grid() const;

  SubsetBits removable(const SubsetBits& present) const;

 private:
  RemovalRule(RuleKind k, ColoredPoset p)
      : kind_(k), poset_(std::make_shared<ColoredPoset>(std::move(p))) {}
  RemovalRule(RuleKind k) : kind_(k) {}

  RuleKind kind_;
  std::shared_ptr<const ColoredPoset> poset_;
  std::shared_ptr<const TreeGraph> tree_;
  std::shared_ptr<const Grid> grid_;
};

struct GameState {
  RemovalRule rule;
  SubsetBits present;
};

inline GameState initial_state(RemovalRule rule) {
  SubsetBits all(rule.ground_size(), true);
  return {std::move(rule), std::move(all)};
}

SubsetBits legal_moves(const GameState& state, Color mover);

// Returns the shrunk state; throws IllegalMove if `element` is absent or not
// removable.
GameState apply_move(const GameState& state, int element);

// Exhaustive audit of ρ(B)∩A ⊆ ρ(A) ⊆ A over all nested pairs A ⊆ B.
// Throws GroundTooLarge above `bound` elements (3^n pairs get enumerated).
bool check_monotonicity(const RemovalRule& rule, int bound = 12);

// Same audit for an arbitrary removability function over universe 0..n-1;
// lets tests exercise deliberately broken rules.
bool check_monotonicity_fn(int n, const std::function<SubsetBits(const SubsetBits&)>& rho,
                           int bound = 12);

}  // namespace pomax
