#pragma once

#include <cstdint>

#include "cclust/core.hpp"

namespace cclust {

enum class ReconstructRule {
  /// Keep f on e if at least two edges of δ(e) are stable under f, else
  /// recolor e with ℓ(e).
  TwoStable,
  /// Per matching edge, whichever of "keep f" and "recolor to ℓ(e)" makes
  /// more edges of δ(e) stable (ties keep f).
  BestOfTwo,
};

/// Adjusts f on the vertices of each edge of the induced matching M.
/// Throws PreconditionError if M is not induced.
VertexColoring reconstruct(const ColoredHypergraph& g, const EdgeSet& m, const VertexColoring& f,
                           ReconstructRule rule = ReconstructRule::BestOfTwo);

struct ColorCodingConfig {
  EdgeSet matching;       // induced
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  long long repetitions = 0;  // 0: derive from epsilon
  ReconstructRule rule = ReconstructRule::BestOfTwo;
};

/// ceil(|C|^{2d(k-|M|)} · ln(1/ε)), saturating.
long long default_repetitions(const Instance& inst, int matching_size, double epsilon);

struct ColorCodingResult {
  bool yes = false;  // false means "no witness found" (one-sided)
  EdgeSet witness;
  long long repetitions = 0;  // planned
  long long used = 0;         // performed
  double epsilon = 0;
};

ColorCodingResult solve_color_coding(const Instance& inst, const ColorCodingConfig& cfg);

/// Enumerates stable F' ⊆ E \ M with |F'| <= 2(k - |M|) and extends each by
/// the compatible matching edges. Exact. Throws if M is not induced.
Decision solve_xp(const Instance& inst, const EdgeSet& matching);

}  // namespace cclust
