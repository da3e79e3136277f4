#pragma once

#include <vector>

#include "cclust/core.hpp"
#include "cclust/graph.hpp"

namespace cclust {

/// Bipartite graph given by left-side adjacency into right nodes 0..right-1.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;
};

/// Hopcroft-Karp. Returns, for every left node, its matched right node or -1.
std::vector<int> bipartite_max_matching(const BipartiteGraph& b);

/// König: a minimum vertex cover from a maximum matching, as
/// (left nodes in cover, right nodes in cover).
std::pair<std::vector<int>, std::vector<int>> konig_cover(const BipartiteGraph& b,
                                                          const std::vector<int>& match_left);

/// Edmonds' blossom algorithm. Returns mate[v] (or -1) for every node.
std::vector<int> max_cardinality_matching(const SimpleGraph& g);

/// Size of a maximum matching in the bipartite double cover of g; half of it
/// is the optimum of the vertex cover LP relaxation.
int double_cover_matching_size(const SimpleGraph& g);

/// Pairwise disjoint edges picked greedily in index order.
EdgeSet greedy_maximal_matching(const ColoredHypergraph& g);

/// Maximum matching of a graph (every edge of cardinality two).
/// Throws PreconditionError for hypergraphs.
EdgeSet maximum_matching(const ColoredHypergraph& g);

}  // namespace cclust
