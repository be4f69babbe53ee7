#include "pomax/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "pomax/errors.hpp"
#include "pomax/reductions.hpp"

namespace pomax {

Partition make_partition(std::vector<int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw ValidationError("InvalidPartition", "parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw ValidationError("InvalidPartition", "parts must be weakly decreasing");
  }
  return Partition{std::move(parts)};
}

SkewShape make_skew_shape(Partition outer, Partition inner) {
  if (inner.rows() > outer.rows())
    throw ValidationError("InvalidPartition", "inner partition has more rows than outer");
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.part(i) > outer.part(i))
      throw ValidationError("InvalidPartition", "inner partition does not fit inside outer");
  return SkewShape{std::move(outer), std::move(inner)};
}

ColoredPoset gen_chain(const std::vector<Color>& bottom_to_top) {
  std::vector<std::pair<std::string, Color>> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t i = 0; i < bottom_to_top.size(); ++i) {
    elems.emplace_back("e" + std::to_string(i + 1), bottom_to_top[i]);
    if (i > 0) covers.emplace_back("e" + std::to_string(i), "e" + std::to_string(i + 1));
  }
  return build_poset(elems, covers);
}

namespace {

std::string cell_name(int r, int c) {
  return "r" + std::to_string(r) + "c" + std::to_string(c);
}

ColoredPoset build_diagram(const std::vector<std::pair<int, int>>& cells, DiagramKind kind,
                           const std::function<Color(int, int)>& color_of) {
  std::vector<std::pair<std::string, Color>> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  auto present = [&](int r, int c) {
    return std::find(cells.begin(), cells.end(), std::make_pair(r, c)) != cells.end();
  };
  for (auto [r, c] : cells) elems.emplace_back(cell_name(r, c), color_of(r, c));
  for (auto [r, c] : cells) {
    if (present(r, c - 1)) covers.emplace_back(cell_name(r, c - 1), cell_name(r, c));
    if (present(r - 1, c)) covers.emplace_back(cell_name(r - 1, c), cell_name(r, c));
  }
  ColoredPoset p = build_poset(elems, covers);
  p.set_diagram(kind, cells);
  return p;
}

}  // namespace

ColoredPoset gen_young(const Partition& shape, const std::function<Color(int, int)>& color_of) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < shape.rows(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) cells.emplace_back(i + 1, j);
  return build_diagram(cells, DiagramKind::Young, color_of);
}

ColoredPoset gen_young(const Partition& shape, ChessParity parity) {
  return gen_young(shape, [parity](int r, int c) { return parity_color(parity, r, c); });
}

ColoredPoset gen_skew(const SkewShape& shape, const std::function<Color(int, int)>& color_of) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < shape.outer.rows(); ++i)
    for (int j = shape.inner.part(i) + 1; j <= shape.outer.part(i); ++j)
      cells.emplace_back(i + 1, j);
  return build_diagram(cells, DiagramKind::Skew, color_of);
}

ColoredPoset gen_skew(const SkewShape& shape, ChessParity parity) {
  return gen_skew(shape, [parity](int r, int c) { return parity_color(parity, r, c); });
}

TruncatedSquare gen_truncated_square(int side, uint64_t seed, int removals, ChessParity parity) {
  if (removals > side * side)
    throw ValidationError("TooManyRemovals", std::to_string(removals) + " removals from a " +
                                                 std::to_string(side) + "x" +
                                                 std::to_string(side) + " array");
  if (removals < 0) throw ValidationError("TooManyRemovals", "negative removal count");
  std::vector<std::pair<std::pair<int, int>, Color>> cells;
  for (int r = 1; r <= side; ++r)
    for (int c = 1; c <= side; ++c) cells.push_back({{r, c}, parity_color(parity, r, c)});
  Grid full = make_grid(side, cells);
  RemovalRule rule = RemovalRule::corner(full);

  std::mt19937_64 rng(seed);
  SubsetBits present(full.size(), true);
  std::vector<std::pair<int, int>> removed;
  for (int k = 0; k < removals; ++k) {
    std::vector<int> corners = rule.removable(present).to_vector();
    std::uniform_int_distribution<size_t> pick(0, corners.size() - 1);
    int victim = corners[pick(rng)];
    present.reset(victim);
    removed.push_back(full.cells[size_t(victim)]);
  }

  std::vector<std::pair<std::pair<int, int>, Color>> rest;
  present.for_each([&](int i) { rest.push_back({full.cells[size_t(i)], full.colors[size_t(i)]}); });
  return TruncatedSquare{make_grid(side, rest), std::move(removed)};
}

ColoredPoset gen_random_forest(int n, uint64_t seed, ForestColoring coloring) {
  std::mt19937_64 rng(seed);
  std::vector<int> parent(size_t(std::max(n, 0)), -1);
  std::vector<int> depth(size_t(std::max(n, 0)), 0);
  std::vector<std::pair<std::string, Color>> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int t = 0; t < n; ++t) {
    std::uniform_int_distribution<int> pick(0, t);  // t means "new root"
    int r = pick(rng);
    if (r < t) {
      parent[size_t(t)] = r;
      depth[size_t(t)] = depth[size_t(r)] + 1;
    }
    Color color;
    if (coloring == ForestColoring::Chess)
      color = depth[size_t(t)] % 2 == 0 ? Color::White : Color::Black;
    else
      color = std::uniform_int_distribution<int>(0, 1)(rng) ? Color::Black : Color::White;
    elems.emplace_back("e" + std::to_string(t + 1), color);
    if (parent[size_t(t)] >= 0)
      covers.emplace_back("e" + std::to_string(parent[size_t(t)] + 1), "e" + std::to_string(t + 1));
  }
  return build_poset(elems, covers);
}

ColoredPoset gen_random_poset(int n, uint64_t seed, double relation_density) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(std::clamp(relation_density, 0.0, 1.0));
  std::vector<std::vector<char>> rel(size_t(std::max(n, 0)), std::vector<char>(size_t(std::max(n, 0)), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) rel[size_t(i)][size_t(j)] = 1;
  // Transitive closure, then reduction, so covers satisfy Hasse semantics.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < k; ++i)
      if (rel[size_t(i)][size_t(k)])
        for (int j = k + 1; j < n; ++j)
          if (rel[size_t(k)][size_t(j)]) rel[size_t(i)][size_t(j)] = 1;
  std::vector<std::pair<std::string, Color>> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i)
    elems.emplace_back("p" + std::to_string(i + 1),
                       std::uniform_int_distribution<int>(0, 1)(rng) ? Color::Black : Color::White);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!rel[size_t(i)][size_t(j)]) continue;
      bool implied = false;
      for (int k = i + 1; k < j && !implied; ++k)
        implied = rel[size_t(i)][size_t(k)] && rel[size_t(k)][size_t(j)];
      if (!implied)
        covers.emplace_back("p" + std::to_string(i + 1), "p" + std::to_string(j + 1));
    }
  return build_poset(elems, covers);
}

TreeGraph gen_random_tree_graph(int n, uint64_t seed, bool chess_coloring) {
  std::mt19937_64 rng(seed);
  std::vector<int> depth(size_t(std::max(n, 0)), 0);
  std::vector<std::pair<std::string, Color>> verts;
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < n; ++t) {
    int parent = -1;
    if (t > 0) {
      parent = std::uniform_int_distribution<int>(0, t - 1)(rng);
      depth[size_t(t)] = depth[size_t(parent)] + 1;
      edges.emplace_back(parent, t);
    }
    Color color = chess_coloring
                      ? (depth[size_t(t)] % 2 == 0 ? Color::White : Color::Black)
                      : (std::uniform_int_distribution<int>(0, 1)(rng) ? Color::Black : Color::White);
    verts.emplace_back("v" + std::to_string(t + 1), color);
  }
  return make_tree_graph(verts, edges);
}

namespace {

ColoredPoset intro_poset() {
  return build_poset({{"z", Color::Black}, {"w", Color::White}, {"x", Color::White}, {"y", Color::Black}},
                     {{"x", "z"}, {"y", "z"}, {"y", "w"}});
}

ColoredPoset fig2_plane_partition() {
  // Order ideal of a product of three chains; elements are coordinate
  // triples, colored white when the coordinate sum is even.
  static const char* kCells[] = {"000", "100", "010", "001", "200", "110", "020", "101",
                                 "011", "002", "300", "210", "120", "030", "201", "111",
                                 "021", "102", "012", "220", "301", "031", "112"};
  std::vector<std::array<int, 3>> cells;
  std::vector<std::pair<std::string, Color>> elems;
  for (const char* s : kCells) {
    std::array<int, 3> t{s[0] - '0', s[1] - '0', s[2] - '0'};
    cells.push_back(t);
    int sum = t[0] + t[1] + t[2];
    elems.emplace_back(std::string("p") + s, sum % 2 == 0 ? Color::White : Color::Black);
  }
  auto name = [](const std::array<int, 3>& t) {
    return "p" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
  };
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : cells)
    for (int axis = 0; axis < 3; ++axis) {
      std::array<int, 3> d = c;
      d[size_t(axis)]++;
      if (std::find(cells.begin(), cells.end(), d) != cells.end())
        covers.emplace_back(name(c), name(d));
    }
  return build_poset(elems, covers);
}

ColoredPoset fig2_lattice() {
  return build_poset({{"w1", Color::White},
                      {"b11", Color::Black},
                      {"b12", Color::Black},
                      {"w2", Color::White},
                      {"b21", Color::Black},
                      {"b22", Color::Black},
                      {"w3", Color::White}},
                     {{"w1", "b11"},
                      {"w1", "b12"},
                      {"b11", "w2"},
                      {"b12", "w2"},
                      {"w2", "b21"},
                      {"w2", "b22"},
                      {"b21", "w3"},
                      {"b22", "w3"}});
}

// The 24-cell truncated square with 11 corners, reconstructed by replaying
// the recorded corner sequence from the full 7×7 array. Gray cells in the
// figure are the even (row+col) class; gray plays Black here.
const std::vector<std::pair<int, int>>& fig6_trace() {
  static const std::vector<std::pair<int, int>> kTrace = {
      {1, 1}, {1, 2}, {1, 7}, {1, 6}, {1, 5}, {2, 1}, {2, 7}, {2, 6}, {7, 1},
      {6, 1}, {5, 1}, {7, 2}, {6, 2}, {5, 2}, {7, 3}, {6, 3}, {7, 4}, {7, 5},
      {7, 6}, {7, 7}, {6, 7}, {5, 7}, {4, 7}, {6, 6}, {5, 6}};
  return kTrace;
}

Grid fig6_grid() {
  std::vector<std::pair<std::pair<int, int>, Color>> cells;
  for (int r = 1; r <= 7; ++r)
    for (int c = 1; c <= 7; ++c)
      cells.push_back({{r, c}, parity_color(ChessParity::TopLeftBlack, r, c)});
  Grid full = make_grid(7, cells);
  RemovalRule rule = RemovalRule::corner(full);
  SubsetBits present(full.size(), true);
  for (auto [r, c] : fig6_trace()) {
    int i = full.cell_index(r, c);
    if (i < 0 || !rule.removable(present).test(i))
      throw std::logic_error("recorded truncated-square sequence is not replayable");
    present.reset(i);
  }
  std::vector<std::pair<std::pair<int, int>, Color>> rest;
  present.for_each([&](int i) { rest.push_back({full.cells[size_t(i)], full.colors[size_t(i)]}); });
  return make_grid(7, rest);
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"intro_poset",   "fig2_plane_partition", "fig2_lattice", "fig3_chain",
          "fig4_np_poset", "fig5_qbf_poset",       "fig6_truncated"};
}

Fixture fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  if (name == "intro_poset") {
    f.poset = intro_poset();
    f.metadata["note"] = "four elements, value zero, both players forced at the start";
  } else if (name == "fig2_plane_partition") {
    f.poset = fig2_plane_partition();
    f.metadata["orientation"] = "even coordinate sum is white";
    f.metadata["note"] = "chess-colored, all maximal elements white, black majority, not balanced";
  } else if (name == "fig2_lattice") {
    f.poset = fig2_lattice();
    f.metadata["note"] = "chess-colored, unique maximal element white, black majority, not balanced";
  } else if (name == "fig3_chain") {
    f.poset = gen_chain({Color::Black, Color::White, Color::Black, Color::Black, Color::White,
                         Color::Black, Color::White});
    f.metadata["note"] = "7-chain with one blocking triple; essential part = top 4";
  } else if (name == "fig4_np_poset") {
    f.poset = reduce_3sat(parse_dimacs("p cnf 3 2\n1 2 -3 0\n-1 2 3 0\n")).poset;
    f.metadata["formula"] = "(x1 | x2 | ~x3) & (~x1 | x2 | x3)";
  } else if (name == "fig5_qbf_poset") {
    f.poset = reduce_qbf(parse_qdimacs("p cnf 4 2\na 1 0\ne 2 0\na 3 0\ne 4 0\n1 -2 -4 0\n2 -3 4 0\n"))
                  .poset;
    f.metadata["formula"] = "Ax1 Ex2 Ax3 Ex4 (x1 | ~x2 | ~x4) & (x2 | ~x3 | x4)";
  } else if (name == "fig6_truncated") {
    f.grid = fig6_grid();
    f.grid_side = 7;
    f.removal_trace = fig6_trace();
    f.metadata["orientation"] = "top-left parity class (even row+col) is black (the figure's gray)";
    f.metadata["note"] = "24 cells, 11 corners, reached from the full 7x7 by the recorded sequence";
  } else {
    throw ValidationError("UnknownFixture", "no fixture named '" + name + "'");
  }
  return f;
}

}  // namespace pomax
