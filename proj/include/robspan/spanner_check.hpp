#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

#include "robspan/geometry.hpp"
#include "robspan/kernels.hpp"

namespace robspan {

/// deletion: G \ S must span V \ S+ (paths may pass through S+ \ S).
/// induced:  G \ S+ must span V \ S+.
enum class SpannerMode { deletion, induced };

std::string_view to_string(SpannerMode mode);
SpannerMode parse_mode(std::string_view text);

struct SpannerCheckOptions {
  // Above this many survivors only sampled sources are checked.
  std::size_t full_check_max_n = std::numeric_limits<std::size_t>::max();
  std::size_t sample_pairs = 100000;
  std::uint64_t seed = 0;
  // Exact linear-time route for integer 1-D inputs at t = 1.
  bool allow_monotone_route = true;
  Execution execution = Execution::parallel;
};

struct SpannerCheck {
  bool ok = true;
  std::optional<PairViolation> violation;
  bool sampled = false;
};

/// Is g a t-spanner of w? In induced mode g is first restricted to w.
/// w must consist of present vertices of g.
SpannerCheck check_spanner(const GeomGraph& g, const VertexSet& w, double t, SpannerMode mode,
                           const SpannerCheckOptions& options = {});

bool is_t_spanner_of(const GeomGraph& g, const VertexSet& w, double t, SpannerMode mode = SpannerMode::deletion);

/// For integer coordinates on a line, a path has stretch 1 exactly when it
/// is monotone, and any detour costs at least 2. So at t below
/// 1 + 2/extent the spanner test reduces to monotone reachability between
/// consecutive survivors.
bool monotone_route_applies(const GeomGraph& g, double t);

/// First consecutive pair of w (by rank) with no monotone path in g.
std::optional<std::pair<Index, Index>> first_monotone_gap(const GeomGraph& g, const VertexSet& w);

}  // namespace robspan
