#pragma once

// Per-source shortest-path kernels. Each kernel has a serial reference
// path and an OpenMP path that fans sources out across threads; both
// produce identical results (asserted in tests, timed in bench/).

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "robspan/geometry.hpp"

namespace robspan {

enum class Execution { serial, parallel };

struct PairViolation {
  Index u;
  Index v;
  double stretch;
};

/// Smallest (source, target) pair in lexicographic order whose stretch in
/// g exceeds t. With upper_only, only targets > source are tested.
std::optional<PairViolation> first_violation(const GeomGraph& g, std::span<const Index> sources,
                                             const VertexSet& targets, double t, bool upper_only,
                                             Execution exec);

/// Every pair u < v of `vertices` whose stretch in g exceeds t, sorted.
std::vector<std::pair<Index, Index>> violating_pairs(const GeomGraph& g, const VertexSet& vertices, double t,
                                                     Execution exec);

/// Largest stretch over pairs (s, w), s in sources, w in targets, w != s.
double max_stretch(const GeomGraph& g, std::span<const Index> sources, const VertexSet& targets,
                   Execution exec);

/// Upper bound on worker threads; honours ROBSPAN_THREADS when set.
int worker_threads();

}  // namespace robspan
