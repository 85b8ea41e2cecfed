#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "robspan/geometry.hpp"

namespace robspan {

/// Survivors of a failure set, joined when their pairwise stretch is too
/// large. Any valid S+ must contain a vertex cover of this graph.
struct ConflictGraph {
  VertexSet vertices;
  std::vector<std::pair<Index, Index>> edges;  // u < v, sorted
};

inline constexpr std::size_t kDefaultExactCap = 32;
// Largest component the branch-and-bound solver accepts, whatever the cap.
inline constexpr std::size_t kBranchAndBoundLimit = 128;

struct CoverResult {
  VertexSet cover;
  bool exact = false;
};

/// Minimum vertex cover, solved per connected component: bipartite
/// components exactly through König's theorem, others by branch and bound
/// when they have at most exact_cap vertices, otherwise by the
/// maximal-matching 2-approximation (exact = false).
CoverResult min_vertex_cover(const ConflictGraph& h, std::size_t exact_cap = kDefaultExactCap);

/// Both endpoints of a greedy maximal matching in edge order.
VertexSet vertex_cover_2approx(const ConflictGraph& h);

/// Branch and bound on the whole graph; requires at most
/// kBranchAndBoundLimit non-isolated vertices.
VertexSet vertex_cover_branch_and_bound(const ConflictGraph& h);

}  // namespace robspan
