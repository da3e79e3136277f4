#pragma once

#include <utility>
#include <vector>

namespace cclust {

/// Plain undirected simple graph with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int num_nodes) : adj_(num_nodes) {}

  /// Builds from an edge list; loops are rejected, duplicates merged.
  static SimpleGraph from_edges(int num_nodes, const std::vector<std::pair<int, int>>& edges);

  int num_nodes() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edge_list() const;

  /// Two-coloring of the nodes if the graph is bipartite.
  bool bipartition(std::vector<int>& side) const;

 private:
  std::vector<std::vector<int>> adj_;
  int num_edges_ = 0;
};

}  // namespace cclust
