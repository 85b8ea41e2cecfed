#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "robspan/certificate.hpp"
#include "robspan/geometry.hpp"
#include "robspan/kernels.hpp"
#include "robspan/vertex_cover.hpp"

namespace robspan {

/// Pairs of V \ S whose stretch in G \ S exceeds t.
ConflictGraph conflict_graph(const GeomGraph& g, const VertexSet& failed, double t,
                             Execution exec = Execution::parallel);

/// Smallest S+ for (g, S, t): S plus a minimum vertex cover of the
/// conflict graph. Induced mode repeats on G \ S+ until no conflicts
/// remain. The result is re-verified before it is returned.
RobustnessCertificate minimal_splus(const GeomGraph& g, const VertexSet& failed, double t,
                                    SpannerMode mode = SpannerMode::deletion,
                                    std::size_t exact_cap = kDefaultExactCap);

inline constexpr std::size_t kMagnificationMaxVertices = 24;

/// Exact min |N(S)| over all S with |S| = s, for s = 1..s_max.
std::map<std::size_t, std::size_t> magnification_bruteforce(const GeomGraph& g, std::size_t s_max);

/// Edge counts per half-open class [boundaries[i], boundaries[i+1]).
std::vector<std::size_t> edge_length_census(const GeomGraph& g, std::span<const double> boundaries);

/// Closed (possibly overlapping) length interval.
struct LengthClass {
  double lo;
  double hi;
};

/// Edge counts per closed class lo <= length <= hi.
std::vector<std::size_t> census_classes(const GeomGraph& g, std::span<const LengthClass> classes);

}  // namespace robspan
