#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "robspan/geometry.hpp"

namespace testing_support {

inline oracle::Graph to_oracle(const robspan::GeomGraph& g) {
  oracle::Graph out;
  const auto& pts = g.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = pts[i];
    out.pts.emplace_back(p.begin(), p.end());
  }
  for (const auto& e : g.edges()) out.edges.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

inline robspan::GeomGraph from_oracle(const oracle::Graph& g) {
  std::vector<double> coords;
  for (const auto& p : g.pts) coords.insert(coords.end(), p.begin(), p.end());
  const std::size_t dim = g.pts.empty() ? 1 : g.pts.front().size();
  std::vector<std::pair<robspan::Index, robspan::Index>> edges;
  for (auto [u, v] : g.edges) edges.emplace_back(u, v);
  return robspan::GeomGraph(robspan::share(robspan::PointSet(dim, std::move(coords))), std::move(edges));
}

inline robspan::GeomGraph path_graph(std::size_t n) { return from_oracle(oracle::path(static_cast<int>(n))); }

// Random simple graph on 1..n (dim 1) or random 2-D points.
inline oracle::Graph random_graph(std::mt19937_64& rng, int n, int dim, double p) {
  oracle::Graph g;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (dim == 1) {
    g = oracle::line(n);
  } else {
    for (int i = 0; i < n; ++i) g.pts.push_back({unit(rng), unit(rng)});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(rng) < p) g.edges.emplace_back(u, v);
  return g;
}

inline std::vector<int> to_ints(const robspan::VertexSet& s) { return {s.begin(), s.end()}; }

inline robspan::VertexSet random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<robspan::Index> all(n), out;
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<robspan::Index>(i);
  std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
  return robspan::VertexSet(out);
}

}  // namespace testing_support
