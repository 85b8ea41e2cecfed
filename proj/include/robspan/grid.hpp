#pragma once

#include <cstddef>
#include <cstdint>

#include "robspan/certificate.hpp"
#include "robspan/geometry.hpp"

namespace robspan {

/// side x side integer grid; point (i, j) has index i * side + j. Edges join
/// horizontal and vertical neighbours.
GeomGraph build_grid(std::size_t side);

struct GridSplusOptions {
  std::uint64_t seed = 0;
  std::size_t max_retries = 16;
  double budget_constant = 64.0;  // accept |S+| <= C k^2
};

struct GridSplusOutcome {
  RobustnessCertificate certificate;
  bool success = false;
  std::size_t trials = 0;
  std::int64_t shift_x = 0, shift_y = 0;
  std::size_t cells = 0;
  double bound = 0.0;
};

/// Random quadtree shift; each failed vertex starts in its unit cell and a
/// cell moves to its parent while its closed 1-ring meets another cell or a
/// failed vertex outside it. S+ is everything inside the final cells,
/// verified at t = 3 in induced mode. Retries with a fresh shift when
/// verification fails or |S+| exceeds the budget; on exhaustion returns the
/// smallest verified attempt (S+ = V when none verified).
GridSplusOutcome splus_grid(const GeomGraph& grid, std::size_t side, const VertexSet& failed,
                            const GridSplusOptions& options = {});

}  // namespace robspan
