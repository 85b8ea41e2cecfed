#include "robspan/robustness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "robspan/error.hpp"

namespace robspan {

ConflictGraph conflict_graph(const GeomGraph& g, const VertexSet& failed, double t, Execution exec) {
  failed.check_range(g.index_count());
  const GeomGraph damaged = remove_vertices(g, failed);
  ConflictGraph h;
  h.vertices = damaged.vertices();
  h.edges = violating_pairs(damaged, h.vertices, t, exec);
  return h;
}

RobustnessCertificate minimal_splus(const GeomGraph& g, const VertexSet& failed, double t, SpannerMode mode,
                                    std::size_t exact_cap) {
  failed.check_range(g.index_count());
  RobustnessCertificate cert;
  cert.t = t;
  cert.mode = mode;
  cert.failed = failed;

  ConflictGraph h = conflict_graph(g, failed, t);
  CoverResult cover = min_vertex_cover(h, exact_cap);
  cert.casualties = failed.unite(cover.cover);
  cert.minimal = cover.exact;

  if (mode == SpannerMode::induced) {
    // Dropping cover vertices from the routing graph can break paths that
    // went through them; repeat until the induced survivors are conflict-free.
    std::size_t rounds = 1;
    while (true) {
      const GeomGraph induced = remove_vertices(g, cert.casualties);
      const VertexSet survivors = induced.vertices();
      auto pairs = violating_pairs(induced, survivors, t, Execution::parallel);
      if (pairs.empty()) break;
      ++rounds;
      h.vertices = survivors;
      h.edges = std::move(pairs);
      cover = min_vertex_cover(h, exact_cap);
      cert.casualties = cert.casualties.unite(cover.cover);
    }
    // One round means the cover was taken against the final graph.
    cert.minimal = cert.minimal && rounds == 1;
  }

  const SpannerCheck check = verify_certificate(g, cert);
  cert.verified = check.ok;
  cert.sampled = check.sampled;
  return cert;
}

std::map<std::size_t, std::size_t> magnification_bruteforce(const GeomGraph& g, std::size_t s_max) {
  const std::size_t n = g.index_count();
  if (n > kMagnificationMaxVertices) {
    throw InputError("magnification: at most " + std::to_string(kMagnificationMaxVertices) + " vertices supported");
  }
  if (2 * s_max > n) throw InputError("magnification: s_max must be at most |V|/2");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::map<std::size_t, std::size_t> out;
  for (std::size_t s = 1; s <= s_max; ++s) {
    std::size_t best = n;
    // Gosper's hack over all s-subsets of n bits.
    std::uint32_t set = (1u << s) - 1;
    const std::uint32_t limit = 1u << n;
    while (set < limit) {
      std::uint32_t boundary = 0;
      for (std::uint32_t rest = set; rest; rest &= rest - 1) boundary |= adj[std::countr_zero(rest)];
      boundary &= ~set;
      best = std::min<std::size_t>(best, std::popcount(boundary));
      const std::uint32_t low = set & (~set + 1);
      const std::uint32_t ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
    out[s] = best;
  }
  return out;
}

std::vector<std::size_t> edge_length_census(const GeomGraph& g, std::span<const double> boundaries) {
  if (!std::is_sorted(boundaries.begin(), boundaries.end())) {
    throw InputError("edge_length_census: boundaries must be sorted");
  }
  std::vector<std::size_t> counts(boundaries.size() > 0 ? boundaries.size() - 1 : 0, 0);
  for (const Edge& e : g.edges()) {
    auto it = std::upper_bound(boundaries.begin(), boundaries.end(), e.length);
    if (it == boundaries.begin() || it == boundaries.end()) continue;
    ++counts[static_cast<std::size_t>(it - boundaries.begin()) - 1];
  }
  return counts;
}

std::vector<std::size_t> census_classes(const GeomGraph& g, std::span<const LengthClass> classes) {
  std::vector<std::size_t> counts(classes.size(), 0);
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].lo <= e.length && e.length <= classes[i].hi) ++counts[i];
    }
  }
  return counts;
}

}  // namespace robspan
