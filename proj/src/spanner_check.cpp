#include "robspan/spanner_check.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "robspan/error.hpp"
#include "robspan/shortest_paths.hpp"

namespace robspan {

std::string_view to_string(SpannerMode mode) { return mode == SpannerMode::deletion ? "deletion" : "induced"; }

SpannerMode parse_mode(std::string_view text) {
  if (text == "deletion") return SpannerMode::deletion;
  if (text == "induced") return SpannerMode::induced;
  throw InputError("unknown spanner mode '" + std::string(text) + "' (expected deletion|induced)");
}

bool monotone_route_applies(const GeomGraph& g, double t) {
  const PointSet& pts = g.points();
  if (pts.dim() != 1 || pts.size() < 2 || !pts.integral()) return false;
  const double extent = pts.coord(pts.size() - 1, 0) - pts.coord(0, 0);
  return t + kStretchTolerance < 1.0 + 2.0 / extent;
}

std::optional<std::pair<Index, Index>> first_monotone_gap(const GeomGraph& g, const VertexSet& w) {
  // Index equals rank on a line, so a monotone path from a to b visits
  // increasing indices inside [a, b]. Intervals between consecutive
  // survivors share only endpoints, so the total work is O(|E|).
  std::vector<char> reach(g.index_count(), 0);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Index a = w[i], b = w[i + 1];
    reach[a] = 1;
    for (Index u = a; u < b; ++u) {
      if (!reach[u]) continue;
      for (const Neighbor& nb : g.neighbors(u)) {
        if (nb.v <= u) continue;
        if (nb.v > b) break;
        reach[nb.v] = 1;
      }
    }
    const bool ok = reach[b] != 0;
    std::fill(reach.begin() + a, reach.begin() + b + 1, char{0});
    if (!ok) return std::make_pair(a, b);
  }
  return std::nullopt;
}

SpannerCheck check_spanner(const GeomGraph& g_in, const VertexSet& w, double t, SpannerMode mode,
                           const SpannerCheckOptions& options) {
  if (t < 1.0) throw InputError("check_spanner: t must be at least 1");
  w.check_range(g_in.index_count());
  for (Index v : w) {
    if (!g_in.present(v)) throw InputError("check_spanner: vertex " + std::to_string(v) + " is not in the graph");
  }
  SpannerCheck result;
  if (w.size() < 2) return result;

  const GeomGraph g = mode == SpannerMode::induced ? restrict_to(g_in, w) : g_in;

  if (options.allow_monotone_route && monotone_route_applies(g, t)) {
    if (auto gap = first_monotone_gap(g, w)) {
      result.ok = false;
      result.violation = PairViolation{gap->first, gap->second, stretch(g, gap->first, gap->second)};
    }
    return result;
  }

  if (w.size() > options.full_check_max_n) {
    const std::size_t per_source = w.size() - 1;
    const std::size_t wanted = std::min(w.size(), (options.sample_pairs + per_source - 1) / per_source);
    std::vector<Index> sources;
    std::mt19937_64 rng(options.seed);
    std::sample(w.begin(), w.end(), std::back_inserter(sources), wanted, rng);
    result.sampled = true;
    result.violation = first_violation(g, sources, w, t, false, options.execution);
  } else {
    result.violation = first_violation(g, w.items(), w, t, true, options.execution);
  }
  result.ok = !result.violation.has_value();
  return result;
}

bool is_t_spanner_of(const GeomGraph& g, const VertexSet& w, double t, SpannerMode mode) {
  return check_spanner(g, w, t, mode).ok;
}

}  // namespace robspan
