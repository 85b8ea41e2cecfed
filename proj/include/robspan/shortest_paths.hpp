#pragma once

#include <vector>

#include "robspan/geometry.hpp"

namespace robspan {

/// Ratio slack absorbed when comparing a stretch against its bound.
inline constexpr double kStretchTolerance = 1e-9;

/// True when graph_length / euclidean > t (beyond the ratio slack).
/// An infinite graph length always exceeds.
inline bool exceeds_stretch(double graph_length, double euclidean, double t) {
  return graph_length > (t + kStretchTolerance) * euclidean;
}

/// Single-source Dijkstra over edge lengths. Absent and unreachable
/// vertices get kInfinity.
std::vector<double> shortest_path_lengths(const GeomGraph& g, Index source);

/// Reusable Dijkstra state, one per worker thread.
class DijkstraWorkspace {
 public:
  const std::vector<double>& run(const GeomGraph& g, Index source);

 private:
  std::vector<double> dist_;
  std::vector<Index> touched_;
  std::vector<std::pair<double, Index>> heap_;
};

/// ||xy||_G / ||xy||; kInfinity when y is unreachable.
double stretch(const GeomGraph& g, Index x, Index y);

}  // namespace robspan
