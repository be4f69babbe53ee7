#include "pomax/poset.hpp"

#include <algorithm>

#include "pomax/errors.hpp"

namespace pomax {

SubsetBits ColoredPoset::maximal_elements(const SubsetBits& present) const {
  SubsetBits out(size());
  present.for_each([&](int i) {
    if (!above_[size_t(i)].intersects(present)) out.set(i);
  });
  return out;
}

SubsetBits ColoredPoset::minimal_elements(const SubsetBits& present) const {
  SubsetBits out(size());
  present.for_each([&](int i) {
    if (!below_[size_t(i)].intersects(present)) out.set(i);
  });
  return out;
}

std::vector<BlockingTriple> ColoredPoset::blocking_triples() const {
  std::vector<BlockingTriple> out;
  for (int x = 0; x < size(); ++x)
    for (int y : up_[size_t(x)]) {
      if (colors_[size_t(y)] != colors_[size_t(x)]) continue;
      for (int z : up_[size_t(y)])
        if (colors_[size_t(z)] != colors_[size_t(y)]) out.push_back({x, y, z});
    }
  return out;
}

bool ColoredPoset::is_chess_colored() const {
  for (auto [lo, hi] : covers_)
    if (colors_[size_t(lo)] == colors_[size_t(hi)]) return false;
  return true;
}

bool ColoredPoset::is_forest() const {
  for (const auto& lc : down_)
    if (lc.size() > 1) return false;
  return true;
}

std::pair<int, int> ColoredPoset::color_counts(const SubsetBits& present) const {
  int w = 0, b = 0;
  present.for_each([&](int i) { (colors_[size_t(i)] == Color::White ? w : b)++; });
  return {w, b};
}

int ColoredPoset::height() const {
  // Longest chain by element count. Construction order need not be
  // topological, so memoized DFS over lower covers.
  std::vector<int> h(size_t(size()), 0);
  int best = 0;
  std::vector<int> stack;
  for (int s = 0; s < size(); ++s) {
    if (h[size_t(s)]) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      bool ready = true;
      for (int u : down_[size_t(v)])
        if (!h[size_t(u)]) {
          stack.push_back(u);
          ready = false;
        }
      if (!ready) continue;
      stack.pop_back();
      if (h[size_t(v)]) continue;
      int m = 0;
      for (int u : down_[size_t(v)]) m = std::max(m, h[size_t(u)]);
      h[size_t(v)] = m + 1;
      best = std::max(best, h[size_t(v)]);
    }
  }
  return best;
}

SubsetBits ColoredPoset::essential_part() const {
  if (!is_forest()) throw ValidationError("NotAForest", "essential part is defined for forest posets");
  SubsetBits cut(size());
  for (const auto& t : blocking_triples()) {
    cut.set(t.x);
    cut |= below_[size_t(t.x)];
  }
  return all() - cut;
}

ColoredPoset ColoredPoset::negate() const {
  ColoredPoset out = *this;
  for (auto& c : out.colors_) c = opposite(c);
  return out;
}

ColoredPoset ColoredPoset::induced(const SubsetBits& present) const {
  std::vector<int> keep = present.to_vector();
  std::vector<std::pair<std::string, Color>> elems;
  elems.reserve(keep.size());
  for (int i : keep) elems.emplace_back(labels_[size_t(i)], colors_[size_t(i)]);

  // Induced covers: i < j with nothing of `present` strictly between.
  std::vector<std::pair<std::string, std::string>> cov;
  for (int j : keep) {
    SubsetBits lower = below_[size_t(j)] & present;
    lower.for_each([&](int i) {
      if (!(above_[size_t(i)] & below_[size_t(j)]).intersects(present))
        cov.emplace_back(labels_[size_t(i)], labels_[size_t(j)]);
    });
  }
  ColoredPoset out = build_poset(elems, cov);
  if (diagram_ != DiagramKind::None) {
    std::vector<std::pair<int, int>> cc;
    cc.reserve(keep.size());
    for (int i : keep) cc.push_back(coords_[size_t(i)]);
    out.set_diagram(diagram_, std::move(cc));
  }
  return out;
}

void ColoredPoset::set_diagram(DiagramKind kind, std::vector<std::pair<int, int>> coords) {
  if (kind != DiagramKind::None && int(coords.size()) != size())
    throw ValidationError("BadCoords", "coordinate list must cover every element");
  diagram_ = kind;
  coords_ = std::move(coords);
}

ColoredPoset build_poset(const std::vector<std::pair<std::string, Color>>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  ColoredPoset p;
  const int n = int(elements.size());
  p.labels_.reserve(size_t(n));
  p.colors_.reserve(size_t(n));
  for (const auto& [label, color] : elements) {
    if (!p.index_.emplace(label, int(p.labels_.size())).second)
      throw ValidationError("DuplicateLabel", "element '" + label + "' appears twice");
    p.labels_.push_back(label);
    p.colors_.push_back(color);
  }

  p.up_.assign(size_t(n), {});
  p.down_.assign(size_t(n), {});
  for (const auto& [lo, hi] : covers) {
    int a = p.index_of(lo), b = p.index_of(hi);
    if (a < 0) throw ValidationError("UnknownLabel", "cover refers to unknown element '" + lo + "'");
    if (b < 0) throw ValidationError("UnknownLabel", "cover refers to unknown element '" + hi + "'");
    if (a == b) throw ValidationError("CycleDetected", "cover '" + lo + "' -> '" + hi + "' is a self-loop");
    p.covers_.emplace_back(a, b);
    p.up_[size_t(a)].push_back(b);
    p.down_[size_t(b)].push_back(a);
  }

  // Kahn topological order; leftover in-degree means a cycle.
  std::vector<int> indeg(size_t(n), 0);
  for (int v = 0; v < n; ++v) indeg[size_t(v)] = int(p.down_[size_t(v)].size());
  std::vector<int> topo;
  topo.reserve(size_t(n));
  for (int v = 0; v < n; ++v)
    if (indeg[size_t(v)] == 0) topo.push_back(v);
  for (size_t head = 0; head < topo.size(); ++head)
    for (int w : p.up_[size_t(topo[head])])
      if (--indeg[size_t(w)] == 0) topo.push_back(w);
  if (int(topo.size()) != n) throw ValidationError("CycleDetected", "cover relation contains a cycle");

  // Closure rows, top-down so above_[child] is ready before its parents.
  p.above_.assign(size_t(n), SubsetBits(n));
  p.below_.assign(size_t(n), SubsetBits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    for (int w : p.up_[size_t(v)]) {
      p.above_[size_t(v)].set(w);
      p.above_[size_t(v)] |= p.above_[size_t(w)];
    }
  }
  for (int v = 0; v < n; ++v)
    p.above_[size_t(v)].for_each([&](int w) { p.below_[size_t(w)].set(v); });

  // Hasse semantics: reject any edge implied by a longer path, and duplicates.
  for (auto [a, b] : p.covers_) {
    if ((p.above_[size_t(a)] & p.below_[size_t(b)]).any())
      throw ValidationError("RedundantCoverEdge", "cover '" + p.labels_[size_t(a)] + "' -> '" +
                                                      p.labels_[size_t(b)] +
                                                      "' is implied by transitivity");
  }
  for (int v = 0; v < n; ++v) {
    auto& u = p.up_[size_t(v)];
    std::sort(u.begin(), u.end());
    if (std::adjacent_find(u.begin(), u.end()) != u.end())
      throw ValidationError("RedundantCoverEdge", "duplicate cover edge above '" + p.labels_[size_t(v)] + "'");
    auto& d = p.down_[size_t(v)];
    std::sort(d.begin(), d.end());
  }
  return p;
}

ColoredPoset disjoint_sum(const ColoredPoset& p, const ColoredPoset& q) {
  std::vector<std::pair<std::string, Color>> elems;
  std::vector<std::pair<std::string, std::string>> cov;
  elems.reserve(size_t(p.size() + q.size()));
  for (int i = 0; i < p.size(); ++i) elems.emplace_back(p.label(i), p.color(i));
  for (auto [a, b] : p.covers()) cov.emplace_back(p.label(a), p.label(b));

  std::vector<std::string> renamed(size_t(q.size()));
  for (int i = 0; i < q.size(); ++i) {
    std::string name = q.label(i);
    while (p.index_of(name) >= 0 ||
           std::any_of(renamed.begin(), renamed.begin() + i, [&](const std::string& s) { return s == name; }))
      name += "'";
    renamed[size_t(i)] = name;
    elems.emplace_back(name, q.color(i));
  }
  for (auto [a, b] : q.covers()) cov.emplace_back(renamed[size_t(a)], renamed[size_t(b)]);
  return build_poset(elems, cov);
}

}  // namespace pomax
