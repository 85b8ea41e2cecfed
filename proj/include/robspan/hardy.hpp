#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "robspan/geometry.hpp"
#include "robspan/tree_cover.hpp"

namespace robspan {

/// Builds a graph on a point set; indices refer to that point set.
using InnerBuilder = std::function<GeomGraph(PointsPtr)>;

struct HardyOptions {
  std::size_t num_shifts = 0;  // 0 picks d + 2
  std::uint64_t seed = 0;
  std::size_t pair_samples = 100000;
};

struct HardyReport {
  std::size_t n = 0;
  std::size_t s = 0;          // s(n)
  std::size_t node_bound = 0; // components keep at most 2s - 1 tree nodes
  std::size_t x_size = 0;
  std::size_t tree_edges = 0;
  std::size_t inner_edges = 0;
  std::size_t edges = 0;
  double tau = 1.0;
  double edges_per_point = 0.0;
};

struct Hardy {
  GeomGraph graph;
  TreeCover cover;
  VertexSet x;
  HardyReport report;
};

/// Tree cover, every tree cut into components of at most s leaves' worth of
/// nodes, and `inner` applied to the pooled separator points. The result is
/// the union of tree edges and inner edges.
Hardy build_hardy(PointsPtr points, std::size_t s, const InnerBuilder& inner, const HardyOptions& options = {});

}  // namespace robspan
