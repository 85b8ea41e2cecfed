#include "robspan/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#include <omp.h>

#include "robspan/shortest_paths.hpp"

namespace robspan {
namespace {

// Smallest violating target of one source, if any.
std::optional<PairViolation> scan_source(const GeomGraph& g, DijkstraWorkspace& ws, Index s,
                                         const VertexSet& targets, double t, bool upper_only) {
  const auto& dist = ws.run(g, s);
  const PointSet& pts = g.points();
  auto it = upper_only ? std::upper_bound(targets.begin(), targets.end(), s) : targets.begin();
  for (; it != targets.end(); ++it) {
    const Index w = *it;
    if (w == s) continue;
    const double euclid = pts.distance(s, w);
    if (exceeds_stretch(dist[w], euclid, t)) return PairViolation{s, w, dist[w] / euclid};
  }
  return std::nullopt;
}

std::optional<PairViolation> first_violation_serial(const GeomGraph& g, std::span<const Index> sources,
                                                    const VertexSet& targets, double t, bool upper_only) {
  std::vector<Index> order(sources.begin(), sources.end());
  std::sort(order.begin(), order.end());
  DijkstraWorkspace ws;
  for (Index s : order) {
    if (auto v = scan_source(g, ws, s, targets, t, upper_only)) return v;
  }
  return std::nullopt;
}

std::optional<PairViolation> first_violation_parallel(const GeomGraph& g, std::span<const Index> sources,
                                                      const VertexSet& targets, double t, bool upper_only) {
  std::vector<Index> order(sources.begin(), sources.end());
  std::sort(order.begin(), order.end());
  const auto count = static_cast<std::ptrdiff_t>(order.size());
  std::vector<std::optional<PairViolation>> found(order.size());
  // Position of the earliest source known to violate; later sources are skipped.
  std::atomic<std::ptrdiff_t> cutoff{count};
#pragma omp parallel num_threads(worker_threads())
  {
    DijkstraWorkspace ws;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      if (i > cutoff.load(std::memory_order_relaxed)) continue;
      found[i] = scan_source(g, ws, order[i], targets, t, upper_only);
      if (found[i]) {
        std::ptrdiff_t cur = cutoff.load();
        while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {
        }
      }
    }
  }
  const std::ptrdiff_t first = cutoff.load();
  if (first < count) return found[first];
  return std::nullopt;
}

}  // namespace

int worker_threads() {
  int limit = omp_get_max_threads();
  if (const char* env = std::getenv("ROBSPAN_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0) limit = std::min(limit, requested);
  }
  return std::max(limit, 1);
}

std::optional<PairViolation> first_violation(const GeomGraph& g, std::span<const Index> sources,
                                             const VertexSet& targets, double t, bool upper_only,
                                             Execution exec) {
  if (exec == Execution::serial) return first_violation_serial(g, sources, targets, t, upper_only);
  return first_violation_parallel(g, sources, targets, t, upper_only);
}

std::vector<std::pair<Index, Index>> violating_pairs(const GeomGraph& g, const VertexSet& vertices, double t,
                                                     Execution exec) {
  const PointSet& pts = g.points();
  const auto count = static_cast<std::ptrdiff_t>(vertices.size());
  std::vector<std::vector<std::pair<Index, Index>>> per_source(vertices.size());
  auto scan = [&](DijkstraWorkspace& ws, std::ptrdiff_t i) {
    const Index s = vertices[static_cast<std::size_t>(i)];
    const auto& dist = ws.run(g, s);
    for (std::ptrdiff_t j = i + 1; j < count; ++j) {
      const Index w = vertices[static_cast<std::size_t>(j)];
      if (exceeds_stretch(dist[w], pts.distance(s, w), t)) per_source[i].emplace_back(s, w);
    }
  };
  if (exec == Execution::serial) {
    DijkstraWorkspace ws;
    for (std::ptrdiff_t i = 0; i < count; ++i) scan(ws, i);
  } else {
#pragma omp parallel num_threads(worker_threads())
    {
      DijkstraWorkspace ws;
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < count; ++i) scan(ws, i);
    }
  }
  std::vector<std::pair<Index, Index>> out;
  for (auto& part : per_source) out.insert(out.end(), part.begin(), part.end());
  return out;
}

double max_stretch(const GeomGraph& g, std::span<const Index> sources, const VertexSet& targets,
                   Execution exec) {
  const PointSet& pts = g.points();
  const auto count = static_cast<std::ptrdiff_t>(sources.size());
  std::vector<double> per_source(sources.size(), 1.0);
  auto scan = [&](DijkstraWorkspace& ws, std::ptrdiff_t i) {
    const Index s = sources[static_cast<std::size_t>(i)];
    const auto& dist = ws.run(g, s);
    double best = 1.0;
    for (Index w : targets) {
      if (w == s) continue;
      best = std::max(best, dist[w] / pts.distance(s, w));
    }
    per_source[i] = best;
  };
  if (exec == Execution::serial) {
    DijkstraWorkspace ws;
    for (std::ptrdiff_t i = 0; i < count; ++i) scan(ws, i);
  } else {
#pragma omp parallel num_threads(worker_threads())
    {
      DijkstraWorkspace ws;
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < count; ++i) scan(ws, i);
    }
  }
  return per_source.empty() ? 1.0 : *std::max_element(per_source.begin(), per_source.end());
}

}  // namespace robspan
