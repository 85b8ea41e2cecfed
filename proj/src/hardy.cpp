#include "robspan/hardy.hpp"

#include "robspan/centroid.hpp"
#include "robspan/error.hpp"

namespace robspan {

Hardy build_hardy(PointsPtr points, std::size_t s, const InnerBuilder& inner, const HardyOptions& options) {
  if (s == 0) throw InputError("build_hardy: s(n) must be at least 1");
  const std::size_t n = points->size();
  Hardy out;
  HardyReport& report = out.report;
  report.n = n;
  report.s = s;
  report.node_bound = 2 * s - 1;

  TreeCoverOptions cover_options;
  cover_options.num_shifts = options.num_shifts == 0 ? points->dim() + 2 : options.num_shifts;
  cover_options.seed = options.seed;
  cover_options.pair_samples = options.pair_samples;
  out.cover = shifted_quadtree_cover(*points, cover_options);
  report.tau = out.cover.tau;

  std::vector<Index> pooled;
  for (const BinaryTree& tree : out.cover.trees) {
    const SeparatorSet sep = centroid_decompose(tree.adjacency(), report.node_bound);
    for (int u : sep.separators) pooled.push_back(tree.rep[static_cast<std::size_t>(u)]);
  }
  out.x = VertexSet(std::move(pooled));
  report.x_size = out.x.size();

  std::vector<std::pair<Index, Index>> edges = out.cover.edges();
  report.tree_edges = edges.size();
  if (out.x.size() >= 2) {
    const GeomGraph sub = inner(share(points->subset(out.x.items())));
    if (sub.index_count() != out.x.size()) throw BuildError("build_hardy: inner builder changed the vertex count");
    for (const Edge& e : sub.edges()) edges.emplace_back(out.x[e.u], out.x[e.v]);
    report.inner_edges = sub.edge_count();
  }
  out.graph = GeomGraph(std::move(points), std::move(edges), DuplicateEdges::merge);
  report.edges = out.graph.edge_count();
  report.edges_per_point = n == 0 ? 0.0 : static_cast<double>(report.edges) / static_cast<double>(n);
  return out;
}

}  // namespace robspan
