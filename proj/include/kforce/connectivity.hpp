#pragma once

#include "kforce/graph.hpp"

#include <cstdint>

namespace kforce {

/// k-connectivity: n > k and deleting any set of fewer than k vertices
/// (including none) leaves a connected graph. Brute force over deletion sets.
inline bool vertex_k_connected(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n <= k) return false;
  for (std::size_t size = 0; size < k; ++size) {
    const bool broken = for_each_subset_colex(n, size, [&](std::uint64_t mask) {
      const VertexSet remaining = VertexSet::from_mask(n, mask).complement();
      return !g.induces_connected(remaining);
    });
    if (broken) return false;
  }
  return true;
}

}  // namespace kforce
