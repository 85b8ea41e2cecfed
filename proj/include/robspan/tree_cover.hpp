#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "robspan/geometry.hpp"

namespace robspan {

/// Rooted binary tree whose nodes stand for points. Every point is exactly
/// one leaf and at most one internal node.
struct BinaryTree {
  static constexpr int kNone = -1;

  std::vector<int> parent;
  std::vector<std::pair<int, int>> children;  // kNone for a leaf
  std::vector<Index> rep;                     // r(u)
  std::vector<int> leaf_of;                   // point -> leaf node
  std::vector<int> internal_of;               // point -> internal node or kNone
  int root = kNone;

  std::size_t size() const noexcept { return parent.size(); }
  bool is_leaf(int u) const { return children[static_cast<std::size_t>(u)].first == kNone; }
  std::vector<std::vector<int>> adjacency() const;
  /// Point pairs r(u) r(parent(u)) with distinct endpoints.
  std::vector<std::pair<Index, Index>> point_edges() const;
  /// Length of the point path r(u)...r(v) between the leaves of x and y.
  double path_length(const PointSet& points, Index x, Index y) const;
};

/// Family of trees such that every pair has a short tree path in at least
/// one of them; tau is the measured worst case of that shortest tree
/// stretch.
struct TreeCover {
  std::vector<BinaryTree> trees;
  double tau = 1.0;
  std::size_t pairs_measured = 0;

  std::vector<std::pair<Index, Index>> edges() const;
};

struct TreeCoverOptions {
  std::size_t num_shifts = 3;
  std::uint64_t seed = 0;
  std::size_t pair_samples = 100000;
};

/// Compressed quadtrees over randomly shifted copies of the bounding cube.
/// Quadtree nodes with m > 2 children become left-leaning combs of binary
/// nodes; each internal node takes the lowest-index point handed up by its
/// children that no ancestor-side node has used yet.
TreeCover shifted_quadtree_cover(const PointSet& points, const TreeCoverOptions& options = {});

/// Smallest per-pair tree stretch, maximised over all pairs (when at most
/// pair_samples of them) or over pair_samples random pairs.
std::pair<double, std::size_t> measure_tree_stretch(const std::vector<BinaryTree>& trees, const PointSet& points,
                                                    std::size_t pair_samples, std::uint64_t seed);

/// Asserts the leaf bijection, the single internal occurrence and
/// binarity; throws BuildError on violation.
void check_tree(const BinaryTree& tree, std::size_t point_count);

}  // namespace robspan
