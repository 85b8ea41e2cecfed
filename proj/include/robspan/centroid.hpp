#pragma once

#include <cstddef>
#include <vector>

namespace robspan {

/// Tree nodes X whose removal leaves components of at most k_prime nodes.
struct SeparatorSet {
  std::vector<int> separators;        // removal order
  std::vector<int> component_of;      // -1 for separators
  std::vector<std::size_t> component_sizes;
  std::size_t k_prime = 0;
};

/// Repeatedly removes a centroid (lowest index among valid centroids) of
/// any component with more than k_prime nodes. Works on forests.
SeparatorSet centroid_decompose(const std::vector<std::vector<int>>& adjacency, std::size_t k_prime);

/// Connected components of the forest minus the `removed` nodes; removed
/// nodes get -1. Returns the component count.
std::size_t label_components(const std::vector<std::vector<int>>& adjacency, const std::vector<char>& removed,
                             std::vector<int>& component_of);

}  // namespace robspan
