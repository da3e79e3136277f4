#include "cclust/oracle.hpp"

#include <algorithm>
#include <limits>

namespace cclust {

std::uint64_t oracle_search_space(const ColoredHypergraph& g) {
  const auto profile = degree_profile(g);
  std::uint64_t product = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::uint64_t options = profile.chromatic_degree(v) + 1;
    for (const auto& cc : profile.by_color[v]) {
      if (cc.color == kDefaultColor) --options;
    }
    if (product > std::numeric_limits<std::uint64_t>::max() / options) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    product *= options;
  }
  return product;
}

namespace {

class ColoringSearch {
 public:
  explicit ColoringSearch(const ColoredHypergraph& g) : g_(g) {
    const int n = g.num_vertices();
    coloring_.assign(n, kDefaultColor);
    closing_.assign(n, {});
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto& vs = g.edge(e).vertices;
      closing_[*std::max_element(vs.begin(), vs.end())].push_back(e);
    }
    // Edges not yet decided once all vertices < v are colored.
    open_after_.assign(n + 1, 0);
    for (int v = n - 1; v >= 0; --v) {
      open_after_[v] = open_after_[v + 1] + static_cast<int>(closing_[v].size());
    }
    candidates_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      auto& cand = candidates_[v];
      for (EdgeId e : g.incident(v)) cand.push_back(g.color(e));
      cand.push_back(kDefaultColor);
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    }
  }

  Solution run() {
    best_ = -1;
    descend(0, 0);
    Solution s;
    s.size = best_;
    s.witness = stable_under(g_, best_coloring_);
    return s;
  }

 private:
  void descend(VertexId v, int stable_so_far) {
    if (stable_so_far + open_after_[v] <= best_) return;
    if (v == g_.num_vertices()) {
      best_ = stable_so_far;
      best_coloring_ = coloring_;
      return;
    }
    for (ColorId c : candidates_[v]) {
      coloring_[v] = c;
      int gained = 0;
      for (EdgeId e : closing_[v]) {
        if (g_.color(e) != c) continue;
        const auto& vs = g_.edge(e).vertices;
        if (std::all_of(vs.begin(), vs.end(), [&](VertexId u) { return coloring_[u] == c; })) {
          ++gained;
        }
      }
      descend(v + 1, stable_so_far + gained);
    }
    coloring_[v] = kDefaultColor;
  }

  const ColoredHypergraph& g_;
  VertexColoring coloring_;
  VertexColoring best_coloring_;
  std::vector<std::vector<EdgeId>> closing_;
  std::vector<int> open_after_;
  std::vector<std::vector<ColorId>> candidates_;
  int best_ = -1;
};

}  // namespace

Solution oracle_max_stable(const ColoredHypergraph& g, std::uint64_t search_limit) {
  const auto space = oracle_search_space(g);
  if (space > search_limit) {
    throw SearchSpaceTooLarge("oracle search space " + std::to_string(space) +
                              " exceeds limit " + std::to_string(search_limit));
  }
  return ColoringSearch(g).run();
}

}  // namespace cclust
