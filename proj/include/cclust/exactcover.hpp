#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "cclust/core.hpp"

namespace cclust {

/// Weighted Exact Cover: pick pairwise disjoint sets covering exactly s
/// elements with total weight at least W.
struct WecInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;  // each sorted, nonempty
  std::vector<long long> weights;
  int s = 0;
  long long target = 0;  // W
};

struct WecReduction {
  bool decided_yes = false;
  EdgeSet witness;  // when decided_yes
  WecInstance wec;
  /// Color of each set; -1 for padding singletons.
  std::vector<ColorId> set_color;
  int num_vertices = 0;
};

/// Monochromatic components become candidate sets (all nonempty subsets,
/// weighted by the color's edges inside); s = d*k padding singletons of weight 0.
/// Short-circuits to YES when a color has >= k components or a component has
/// >= k edges.
WecReduction reduce_to_wec(const Instance& inst);

/// Chosen set indices of a feasible subfamily of maximum weight, if any
/// exact-s cover reaches the target.
std::optional<std::vector<int>> solve_wec(const WecInstance& w);

/// Exhaustive reference for small instances: best weight over exact-s
/// covers, or nullopt if none.
std::optional<long long> brute_force_wec(const WecInstance& w);

/// Decision through the reduction; a YES carries a stable witness.
Decision solve_via_exactcover(const Instance& inst);

/// Forward direction: the subfamily induced by a stable set of exactly k edges.
std::optional<std::vector<int>> wec_family_for(const WecReduction& red, const ColoredHypergraph& g,
                                               const EdgeSet& stable_set);

/// Backward direction: stable edges recovered from a chosen subfamily.
EdgeSet edges_from_family(const WecReduction& red, const ColoredHypergraph& g,
                          const std::vector<int>& family);

/// `p wec <|U|> <|S|> <s> <W>` then one `s <w> <elem...>` line per set.
void write_wec(std::ostream& out, const WecInstance& w);

}  // namespace cclust
