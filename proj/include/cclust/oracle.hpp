#pragma once

#include <cstdint>

#include "cclust/core.hpp"

namespace cclust {

/// Thrown when the oracle's search space exceeds its configured limit.
class SearchSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Product over vertices of (chromatic degree + 1): the number of colorings
/// the oracle enumerates before pruning. Saturates at UINT64_MAX.
std::uint64_t oracle_search_space(const ColoredHypergraph& g);

/// Exact maximum stable edge set by enumerating vertex colorings, where each
/// vertex ranges over its incident colors plus the default color. Independent
/// of every other solver in the library; used as the verification reference.
Solution oracle_max_stable(const ColoredHypergraph& g,
                           std::uint64_t search_limit = 100'000'000);

}  // namespace cclust
