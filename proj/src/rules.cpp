#include "pomax/rules.hpp"

#include <algorithm>

#include "pomax/errors.hpp"

namespace pomax {

TreeGraph make_tree_graph(std::vector<std::pair<std::string, Color>> vertices,
                          std::vector<std::pair<int, int>> edges) {
  TreeGraph t;
  for (auto& [label, color] : vertices) {
    for (const auto& other : t.labels)
      if (other == label) throw ValidationError("DuplicateLabel", "vertex '" + label + "' appears twice");
    t.labels.push_back(std::move(label));
    t.colors.push_back(color);
  }
  const int n = t.size();
  t.adj.assign(size_t(n), {});
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError("UnknownVertex", "edge endpoint out of range");
    if (a == b) throw ValidationError("NotATree", "self-loop edge");
    t.adj[size_t(a)].push_back(b);
    t.adj[size_t(b)].push_back(a);
  }
  t.edges = std::move(edges);
  if (n > 0) {
    if (int(t.edges.size()) != n - 1)
      throw ValidationError("NotATree", "a tree on n vertices has exactly n-1 edges");
    std::vector<char> seen(size_t(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : t.adj[size_t(v)])
        if (!seen[size_t(u)]) {
          seen[size_t(u)] = 1;
          ++visited;
          stack.push_back(u);
        }
    }
    if (visited != n) throw ValidationError("NotATree", "graph is disconnected");
  }
  for (auto& a : t.adj) std::sort(a.begin(), a.end());
  return t;
}

int Grid::cell_index(int row, int col) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), std::make_pair(row, col));
  if (it == cells.end() || *it != std::make_pair(row, col)) return -1;
  return int(it - cells.begin());
}

std::string Grid::cell_label(int i) const {
  auto [r, c] = cells[size_t(i)];
  return "r" + std::to_string(r) + "c" + std::to_string(c);
}

Grid make_grid(int side, std::vector<std::pair<std::pair<int, int>, Color>> cells) {
  if (side < 0) throw ValidationError("BadGrid", "side must be nonnegative");
  Grid g;
  g.side = side;
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [cell, color] : cells) {
    auto [r, c] = cell;
    if (r < 1 || r > side || c < 1 || c > side)
      throw ValidationError("BadGrid", "cell (" + std::to_string(r) + "," + std::to_string(c) +
                                           ") outside the " + std::to_string(side) + "x" +
                                           std::to_string(side) + " array");
    if (!g.cells.empty() && g.cells.back() == cell)
      throw ValidationError("BadGrid", "duplicate cell (" + std::to_string(r) + "," +
                                           std::to_string(c) + ")");
    g.cells.push_back(cell);
    g.colors.push_back(color);
  }
  return g;
}

const char* rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::Pomax: return "pomax";
    case RuleKind::MinMax: return "minmax";
    case RuleKind::Leaf: return "leaf";
    case RuleKind::Corner: return "corner";
  }
  return "?";
}

RemovalRule RemovalRule::leaf(TreeGraph t) {
  RemovalRule r(RuleKind::Leaf);
  r.tree_ = std::make_shared<TreeGraph>(std::move(t));
  return r;
}

RemovalRule RemovalRule::corner(Grid g) {
  RemovalRule r(RuleKind::Corner);
  r.grid_ = std::make_shared<Grid>(std::move(g));
  return r;
}

int RemovalRule::ground_size() const {
  if (poset_) return poset_->size();
  if (tree_) return tree_->size();
  return grid_->size();
}

Color RemovalRule::color(int i) const {
  if (poset_) return poset_->color(i);
  if (tree_) return tree_->colors[size_t(i)];
  return grid_->colors[size_t(i)];
}

std::string RemovalRule::label(int i) const {
  if (poset_) return poset_->label(i);
  if (tree_) return tree_->labels[size_t(i)];
  return grid_->cell_label(i);
}

int RemovalRule::index_of(const std::string& label) const {
  if (poset_) return poset_->index_of(label);
  for (int i = 0; i < ground_size(); ++i)
    if (this->label(i) == label) return i;
  return -1;
}

std::pair<int, int> RemovalRule::color_counts(const SubsetBits& present) const {
  int w = 0, b = 0;
  present.for_each([&](int i) { (color(i) == Color::White ? w : b)++; });
  return {w, b};
}

const ColoredPoset& RemovalRule::poset() const {
  if (!poset_) throw ValidationError("RuleGroundMismatch", "rule has no poset ground");
  return *poset_;
}

const TreeGraph& RemovalRule::tree() const {
  if (!tree_) throw ValidationError("RuleGroundMismatch", "rule has no tree ground");
  return *tree_;
}

const Grid& RemovalRule::grid() const {
  if (!grid_) throw ValidationError("RuleGroundMismatch", "rule has no grid ground");
  return *grid_;
}

SubsetBits RemovalRule::removable(const SubsetBits& present) const {
  switch (kind_) {
    case RuleKind::Pomax:
      return poset_->maximal_elements(present);
    case RuleKind::MinMax:
      return poset_->maximal_elements(present) | poset_->minimal_elements(present);
    case RuleKind::Leaf: {
      SubsetBits out(tree_->size());
      present.for_each([&](int v) {
        int deg = 0;
        for (int u : tree_->adj[size_t(v)]) deg += present.test(u);
        if (deg <= 1) out.set(v);
      });
      return out;
    }
    case RuleKind::Corner: {
      const Grid& g = *grid_;
      SubsetBits out(g.size());
      present.for_each([&](int i) {
        auto [r, c] = g.cells[size_t(i)];
        int row = 0, col = 0;
        for (int d : {-1, 1}) {
          int j = g.cell_index(r, c + d);
          if (j >= 0 && present.test(j)) ++row;
          j = g.cell_index(r + d, c);
          if (j >= 0 && present.test(j)) ++col;
        }
        if (row <= 1 && col <= 1) out.set(i);
      });
      return out;
    }
  }
  return SubsetBits(ground_size());
}

SubsetBits legal_moves(const GameState& state, Color mover) {
  SubsetBits moves = state.rule.removable(state.present);
  SubsetBits out(moves.universe());
  moves.for_each([&](int i) {
    if (state.rule.color(i) == mover) out.set(i);
  });
  return out;
}

GameState apply_move(const GameState& state, int element) {
  if (element < 0 || element >= state.rule.ground_size() || !state.present.test(element))
    throw ValidationError("IllegalMove", "element is not present");
  if (!state.rule.removable(state.present).test(element))
    throw ValidationError("IllegalMove",
                          "'" + state.rule.label(element) + "' is not removable here");
  GameState next = state;
  next.present.reset(element);
  return next;
}

bool check_monotonicity_fn(int n, const std::function<SubsetBits(const SubsetBits&)>& rho,
                           int bound) {
  if (n > bound)
    throw BoundError("GroundTooLarge", "monotonicity audit enumerates 3^n pairs; ground has " +
                                           std::to_string(n) + " > " + std::to_string(bound) +
                                           " elements");
  // Every pair A ⊆ B, walked as B over all subsets and A over submasks of B.
  for (uint64_t bmask = 0; bmask < (uint64_t{1} << n); ++bmask) {
    SubsetBits B(n);
    for (int i = 0; i < n; ++i)
      if ((bmask >> i) & 1) B.set(i);
    SubsetBits rhoB = rho(B);
    if (!rhoB.is_subset_of(B)) return false;
    uint64_t amask = bmask;
    while (true) {
      SubsetBits A(n);
      for (int i = 0; i < n; ++i)
        if ((amask >> i) & 1) A.set(i);
      SubsetBits rhoA = rho(A);
      if (!rhoA.is_subset_of(A)) return false;
      if (!(rhoB & A).is_subset_of(rhoA)) return false;
      if (amask == 0) break;
      amask = (amask - 1) & bmask;
    }
  }
  return true;
}

bool check_monotonicity(const RemovalRule& rule, int bound) {
  return check_monotonicity_fn(rule.ground_size(),
                               [&](const SubsetBits& a) { return rule.removable(a); }, bound);
}

}  // namespace pomax
