#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pomax/rules.hpp"

namespace pomax {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, every part ≥ 1
  int cells() const {
    int c = 0;
    for (int p : parts) c += p;
    return c;
  }
  int rows() const { return int(parts.size()); }
  int part(int i) const { return i >= 0 && i < rows() ? parts[size_t(i)] : 0; }  // 0-based
};

// Throws InvalidPartition unless weakly decreasing with positive parts.
Partition make_partition(std::vector<int> parts);

struct SkewShape {
  Partition outer, inner;
};
// Throws InvalidPartition unless inner fits inside outer.
SkewShape make_skew_shape(Partition outer, Partition inner);

// Which (row+col) parity class is White; TopLeftWhite puts White on the class
// of the array's top-left cell (row+col even, 1-based).
enum class ChessParity { TopLeftWhite, TopLeftBlack };

inline Color parity_color(ChessParity p, int row, int col) {
  bool even = (row + col) % 2 == 0;
  return even == (p == ChessParity::TopLeftWhite) ? Color::White : Color::Black;
}

// Total order, bottom to top in list order; labels e1..ek upward.
ColoredPoset gen_chain(const std::vector<Color>& bottom_to_top);

// Cells (i,j), 1 ≤ j ≤ parts[i]; each cell covers its left and upper
// neighbor; labels r{i}c{j}; carries diagram coordinates.
ColoredPoset gen_young(const Partition& shape, ChessParity parity);
ColoredPoset gen_young(const Partition& shape, const std::function<Color(int, int)>& color_of);

ColoredPoset gen_skew(const SkewShape& shape, ChessParity parity);
ColoredPoset gen_skew(const SkewShape& shape, const std::function<Color(int, int)>& color_of);

struct TruncatedSquare {
  Grid grid;
  std::vector<std::pair<int, int>> removed;  // the generating corner sequence
};

// Full side×side chess-colored array minus `removals` uniformly random legal
// corner removals. Throws TooManyRemovals past side².
TruncatedSquare gen_truncated_square(int side, uint64_t seed, int removals,
                                     ChessParity parity = ChessParity::TopLeftWhite);

enum class ForestColoring { UniformRandom, Chess };

// Every non-root element covers exactly one earlier element; labels e1..en.
ColoredPoset gen_random_forest(int n, uint64_t seed,
                               ForestColoring coloring = ForestColoring::UniformRandom);

// Random DAG on construction order, covers = its transitive reduction,
// uniformly random colors; labels p1..pn.
ColoredPoset gen_random_poset(int n, uint64_t seed, double relation_density = 0.3);

// Random graph-theoretic tree; chess coloring 2-colors by depth parity
// (root White), otherwise colors are uniform; labels v1..vn.
TreeGraph gen_random_tree_graph(int n, uint64_t seed, bool chess_coloring);

struct Fixture {
  std::string name;
  std::optional<ColoredPoset> poset;
  std::optional<Grid> grid;
  int grid_side = 0;
  std::vector<std::pair<int, int>> removal_trace;  // corner sequence from the full array
  std::map<std::string, std::string> metadata;
};

std::vector<std::string> fixture_names();
// Throws UnknownFixture for names outside fixture_names().
Fixture fixture(const std::string& name);

}  // namespace pomax
