#pragma once

#include "cclust/core.hpp"
#include "cclust/graph.hpp"

namespace cclust {

/// Node per edge of g; two nodes adjacent iff the edges intersect and differ
/// in color. Independent sets are exactly the stable edge sets.
SimpleGraph build_conflict(const ColoredHypergraph& g);

/// Maximum stable set as the complement of a minimum vertex cover of the
/// conflict graph. Works for any order.
Solution solve_via_vc(const Instance& inst);

/// Bounded search on conflicting pairs: drop one of the two edges, at most
/// r = m - k times.
Decision branch_unstable_decide(const Instance& inst);

/// Optimum by running the bounded search with r = 0, 1, 2, ...
Solution branch_unstable(const Instance& inst);

/// Exact for at most two colors through König's theorem.
/// Throws PreconditionError for more colors.
Solution solve_two_colors(const Instance& inst);

/// Decision view of an optimum.
inline Decision decide(const Solution& s, int k) { return {s.size >= k, s.witness}; }

}  // namespace cclust
