#pragma once

#include <cstddef>
#include <vector>

#include "primeiasi/graph.hpp"

namespace primeiasi {

/// Optimal two-sided assignment of a small graph. `sides` is the
/// lexicographically smallest optimal assignment (so vertex 0 is on X).
struct MaxCut {
  std::size_t value = 0;
  std::vector<Side> sides;
};

// Exhaustive search walks 2^(n-1) assignments in Gray-code order.
inline constexpr std::size_t kBruteVertexLimit = 30;
// Assignments are held in 64-bit masks.
inline constexpr std::size_t kBnbVertexLimit = 64;

/// Exhaustive maximum cut. Throws SizeLimitExceeded above kBruteVertexLimit.
MaxCut brute_max_cut(const Graph& g);

/// Exact branch-and-bound maximum cut. Throws SizeLimitExceeded above
/// kBnbVertexLimit.
MaxCut bnb_max_cut(const Graph& g);

}  // namespace primeiasi
