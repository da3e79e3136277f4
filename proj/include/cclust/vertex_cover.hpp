#pragma once

#include <optional>
#include <vector>

#include "cclust/graph.hpp"

namespace cclust {

/// Minimum vertex cover by branch-and-reduce. Reductions: degree 0/1,
/// degree-2 triangle and folding; bound: LP (half-integral) value;
/// disconnected parts are solved separately. Branches on the lowest-indexed
/// node of maximum degree. Returns a sorted cover.
std::vector<int> min_vertex_cover(const SimpleGraph& g);

/// A vertex cover of size at most `budget`, if one exists.
std::optional<std::vector<int>> vertex_cover_at_most(const SimpleGraph& g, int budget);

/// Statistics of the last call on this thread, for tests and reports.
struct VertexCoverStats {
  long long branch_nodes = 0;
  long long folds = 0;
};
const VertexCoverStats& last_vertex_cover_stats();

}  // namespace cclust
