#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "robspan/certificate.hpp"
#include "robspan/geometry.hpp"
#include "robspan/iterated.hpp"

namespace robspan {

/// Edges x_i x_{i+2^j} for every valid rank i and 2^j < n.
GeomGraph build_g2x(PointsPtr points);

/// Consecutive edges plus all edges of span ceil2(f^j(k0)), j = 0..f*(n).
GeomGraph build_gf(PointsPtr points, const IteratedFunction& f);

/// Closed-form edge count: sum over distinct spans s of max(0, n - s).
std::size_t span_edge_count(std::size_t n, const std::vector<std::uint64_t>& spans);

struct SplusOptions {
  std::uint64_t seed = 0;
  std::size_t max_retries = 64;
};

/// Result of a randomized casualty builder. On success the certificate is
/// the accepted trial; otherwise it is the smallest verified attempt seen
/// (falling back to S+ = V, which holds vacuously).
struct SplusOutcome {
  RobustnessCertificate certificate;
  bool success = false;
  std::size_t trials = 0;
  std::uint64_t shift = 0;  // the accepted random offset r
  double bound = 0.0;       // size bound asserted on success
};

/// Vertices killed by S under one random offset, with the cost accounting
/// used to accept or reject the offset.
struct KillPlan {
  VertexSet killed;
  bool expensive = false;   // some vertex of S is expensive
  double cheap_cost = 0.0;  // total cost of the cheap vertices
};

/// Offset r in [0, 2^ceil(log n)); x_i with 2^j || (i - r) kills the
/// 2^{j+1} - 1 vertices centred on it. Ranks are 1-based in the rule,
/// indices 0-based in the result.
KillPlan g2x_kill(std::size_t n, const VertexSet& failed, std::uint64_t r);

/// Offset r in [0, ceil2(f^{f*(n)+1}(k0))); x_i kills the interior of the
/// aligned block of size ceil2(f^j(k0)) that contains it, j being the
/// smallest level whose block size does not divide i - r.
KillPlan gf_kill(std::size_t n, const IteratedFunction& f, const VertexSet& failed, std::uint64_t r);

/// k + 4k log2 k + 12k.
double g2x_casualty_bound(std::size_t k);
/// k + f(4k) (f*(4k) + 1).
double gf_casualty_bound(const IteratedFunction& f, std::size_t k);

SplusOutcome splus_g2x(const GeomGraph& g, const VertexSet& failed, const SplusOptions& options = {});
SplusOutcome splus_gf(const GeomGraph& g, const IteratedFunction& f, const VertexSet& failed,
                      const SplusOptions& options = {});

}  // namespace robspan
