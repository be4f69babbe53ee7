#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pomax/bits.hpp"

namespace pomax {

// White is the left (positive) player, Black the right (negative) one.
enum class Color : uint8_t { White, Black };

inline Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }
inline const char* color_name(Color c) { return c == Color::White ? "white" : "black"; }

// x ⋖ y ⋖ z with color(x) = color(y) ≠ color(z); indices into the poset.
struct BlockingTriple {
  int x, y, z;
  bool operator==(const BlockingTriple&) const = default;
};

// Set when a poset was generated from a (skew) Young diagram; enables the
// coordinate-based solver certificates.
enum class DiagramKind : uint8_t { None, Young, Skew };

// Immutable colored poset. `covers` is the Hasse diagram (transitive
// reduction, enforced at construction); the strict order is its transitive
// closure, precomputed as one bit row per element.
class ColoredPoset {
 public:
  ColoredPoset() = default;

  int size() const { return int(labels_.size()); }
  const std::string& label(int i) const { return labels_[size_t(i)]; }
  Color color(int i) const { return colors_[size_t(i)]; }
  const std::vector<Color>& colors() const { return colors_; }
  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
  }

  // (lower, upper) pairs in construction order.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[size_t(i)]; }
  const std::vector<int>& lower_covers(int i) const { return down_[size_t(i)]; }

  bool less(int i, int j) const { return above_[size_t(i)].test(j); }
  const SubsetBits& above(int i) const { return above_[size_t(i)]; }
  const SubsetBits& below(int i) const { return below_[size_t(i)]; }
  SubsetBits all() const { return SubsetBits(size(), true); }

  SubsetBits maximal_elements(const SubsetBits& present) const;
  SubsetBits minimal_elements(const SubsetBits& present) const;
  std::vector<BlockingTriple> blocking_triples() const;
  bool is_chess_colored() const;
  // Forest poset: every element covers at most one element.
  bool is_forest() const;
  std::pair<int, int> color_counts(const SubsetBits& present) const;  // (white, black)
  // Number of elements in the longest chain; 0 for the empty poset.
  int height() const;

  // The maximal upper set without blocking triples, computed by the closed
  // form { v : v ≤ no blocking-triple bottom }. Throws NotAForest otherwise.
  SubsetBits essential_part() const;

  ColoredPoset negate() const;
  // Subposet on `present` with dense re-indexing (ascending original index);
  // covers are recomputed for the restricted order. Labels, coordinates and
  // diagram kind carry over.
  ColoredPoset induced(const SubsetBits& present) const;

  DiagramKind diagram_kind() const { return diagram_; }
  // (row, col), 1-based; empty unless diagram_kind() != None.
  const std::vector<std::pair<int, int>>& coords() const { return coords_; }
  // Construction-time only (generators attach cell geometry right after
  // build_poset); size must match.
  void set_diagram(DiagramKind kind, std::vector<std::pair<int, int>> coords);

 private:
  friend ColoredPoset build_poset(const std::vector<std::pair<std::string, Color>>&,
                                  const std::vector<std::pair<std::string, std::string>>&);

  std::vector<std::string> labels_;
  std::vector<Color> colors_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;   // cover adjacency, sorted ascending
  std::vector<SubsetBits> above_, below_;     // strict order rows
  std::unordered_map<std::string, int> index_;
  DiagramKind diagram_ = DiagramKind::None;
  std::vector<std::pair<int, int>> coords_;
};

// Validates and indexes. Errors (all ValidationError): DuplicateLabel,
// UnknownLabel, CycleDetected, RedundantCoverEdge.
ColoredPoset build_poset(const std::vector<std::pair<std::string, Color>>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers);

// Disjoint union, no cross relations. Colliding labels on the right get
// apostrophes appended until unique.
ColoredPoset disjoint_sum(const ColoredPoset& p, const ColoredPoset& q);

}  // namespace pomax
