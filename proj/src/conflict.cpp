#include "cclust/conflict.hpp"

#include <algorithm>

#include "cclust/matching.hpp"
#include "cclust/vertex_cover.hpp"

namespace cclust {

SimpleGraph build_conflict(const ColoredHypergraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& inc = g.incident(v);
    for (size_t i = 0; i < inc.size(); ++i) {
      for (size_t j = i + 1; j < inc.size(); ++j) {
        if (g.color(inc[i]) != g.color(inc[j])) pairs.emplace_back(inc[i], inc[j]);
      }
    }
  }
  return SimpleGraph::from_edges(g.num_edges(), pairs);
}

namespace {

EdgeSet complement(int m, const std::vector<int>& removed) {
  std::vector<char> gone(m, 0);
  for (int e : removed) gone[e] = 1;
  EdgeSet out;
  for (int e = 0; e < m; ++e) {
    if (!gone[e]) out.push_back(e);
  }
  return out;
}

class PairBrancher {
 public:
  explicit PairBrancher(const SimpleGraph& cg) : cg_(cg), alive_(cg.num_nodes(), 1) {}

  bool run(int budget) {
    // First conflicting pair among surviving edges, lowest index first.
    for (int e = 0; e < cg_.num_nodes(); ++e) {
      if (!alive_[e]) continue;
      for (int f : cg_.neighbors(e)) {
        if (f <= e || !alive_[f]) continue;
        if (budget == 0) return false;
        for (int drop : {e, f}) {
          alive_[drop] = 0;
          if (run(budget - 1)) return true;
          alive_[drop] = 1;
        }
        return false;
      }
    }
    return true;
  }

  EdgeSet survivors() const {
    EdgeSet out;
    for (int e = 0; e < cg_.num_nodes(); ++e) {
      if (alive_[e]) out.push_back(e);
    }
    return out;
  }

 private:
  const SimpleGraph& cg_;
  std::vector<char> alive_;
};

}  // namespace

Solution solve_via_vc(const Instance& inst) {
  const auto cover = min_vertex_cover(build_conflict(inst.graph));
  Solution s;
  s.witness = complement(inst.graph.num_edges(), cover);
  s.size = static_cast<int>(s.witness.size());
  return s;
}

Decision branch_unstable_decide(const Instance& inst) {
  const int r = inst.r();
  if (inst.k <= 0) return {true, {}};
  if (r < 0) return {false, {}};
  const auto cg = build_conflict(inst.graph);
  PairBrancher b(cg);
  if (!b.run(r)) return {false, {}};
  return {true, b.survivors()};
}

Solution branch_unstable(const Instance& inst) {
  const auto cg = build_conflict(inst.graph);
  for (int r = 0;; ++r) {
    PairBrancher b(cg);
    if (b.run(r)) {
      Solution s;
      s.witness = b.survivors();
      s.size = static_cast<int>(s.witness.size());
      return s;
    }
  }
}

Solution solve_two_colors(const Instance& inst) {
  const auto& g = inst.graph;
  if (g.num_colors() > 2) throw PreconditionError("solve_two_colors: more than two colors");
  const auto cg = build_conflict(g);
  // Color 0 edges on the left, color 1 edges on the right.
  std::vector<int> index(g.num_edges());
  std::vector<int> left_edges, right_edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto& side = g.color(e) == 0 ? left_edges : right_edges;
    index[e] = static_cast<int>(side.size());
    side.push_back(e);
  }
  BipartiteGraph b{static_cast<int>(left_edges.size()), static_cast<int>(right_edges.size()), {}};
  b.adj.resize(b.left);
  for (int i = 0; i < b.left; ++i) {
    for (int f : cg.neighbors(left_edges[i])) b.adj[i].push_back(index[f]);
  }
  const auto match = bipartite_max_matching(b);
  const auto [cover_left, cover_right] = konig_cover(b, match);
  std::vector<int> removed;
  for (int i : cover_left) removed.push_back(left_edges[i]);
  for (int j : cover_right) removed.push_back(right_edges[j]);
  Solution s;
  s.witness = complement(g.num_edges(), removed);
  s.size = static_cast<int>(s.witness.size());
  return s;
}

}  // namespace cclust
