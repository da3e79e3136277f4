#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cclust/core.hpp"

namespace cclust::fixtures {

// Random hypergraph with edge sizes in [1, d] (exactly 2 when d == 2 and graph_only).
inline ColoredHypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, int colors, int d,
                                           bool graph_only = true) {
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> pick_color(0, colors - 1);
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  for (int i = 0; i < m; ++i) {
    int size = d;
    if (!graph_only) size = std::uniform_int_distribution<int>(1, d)(rng);
    size = std::min(size, n);
    std::shuffle(verts.begin(), verts.end(), rng);
    Edge e;
    e.vertices.assign(verts.begin(), verts.begin() + size);
    std::sort(e.vertices.begin(), e.vertices.end());
    e.color = pick_color(rng);
    edges.push_back(e);
  }
  return ColoredHypergraph(n, colors, edges);
}

// Exhaustive maximum over all edge subsets.
inline int subset_max_stable(const ColoredHypergraph& g) {
  const int m = g.num_edges();
  int best = 0;
  std::vector<EdgeId> sel;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int count = __builtin_popcount(mask);
    if (count <= best) continue;
    sel.clear();
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) sel.push_back(e);
    }
    if (is_stable(g, sel)) best = count;
  }
  return best;
}

inline bool valid_witness(const ColoredHypergraph& g, const EdgeSet& w, int size) {
  return static_cast<int>(w.size()) >= size && std::is_sorted(w.begin(), w.end()) && is_stable(g, w);
}

}  // namespace cclust::fixtures
