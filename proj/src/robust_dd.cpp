#include "robspan/robust_dd.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "robspan/centroid.hpp"
#include "robspan/error.hpp"
#include "robspan/graph_io.hpp"
#include "robspan/kernels.hpp"
#include "robspan/wspd.hpp"

namespace robspan {

namespace {

constexpr double kCasualtyConstant = 6.0;

std::vector<std::size_t> level_sizes(const IteratedFunction& f, std::size_t n) {
  std::vector<std::size_t> sizes;
  if (static_cast<double>(n) < f.k0()) return sizes;
  const std::size_t top = f.f_star(static_cast<double>(n));
  for (std::size_t i = 0; i <= top; ++i) {
    const auto k = static_cast<std::size_t>(std::floor(f.iterate(i)));
    if (sizes.empty() || sizes.back() != k) sizes.push_back(k);
  }
  return sizes;
}

DdLevel cut_level(const TreeCover& cover, std::size_t k_prime) {
  DdLevel level;
  level.k_prime = k_prime;
  std::vector<Index> pooled;
  std::vector<std::vector<std::vector<int>>> adjacency;
  for (const BinaryTree& tree : cover.trees) {
    adjacency.push_back(tree.adjacency());
    const SeparatorSet sep = centroid_decompose(adjacency.back(), k_prime);
    for (int u : sep.separators) pooled.push_back(tree.rep[static_cast<std::size_t>(u)]);
  }
  level.x = VertexSet(std::move(pooled));
  for (std::size_t i = 0; i < cover.trees.size(); ++i) {
    const BinaryTree& tree = cover.trees[i];
    std::vector<char> removed(tree.size());
    for (std::size_t u = 0; u < tree.size(); ++u) removed[u] = level.x.contains(tree.rep[u]) ? 1 : 0;
    std::vector<int> component_of;
    label_components(adjacency[i], removed, component_of);
    level.component_of.push_back(std::move(component_of));
  }
  return level;
}

}  // namespace

std::string BuildReport::to_csv() const {
  std::ostringstream out;
  out << "n,d,tau_measured,stretch_bound\n";
  out << n << ',' << d << ',' << format_real(tau) << ',' << format_real(stretch_bound) << '\n';
  out << "level,k_prime,x_size,edges_added\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out << i << ',' << levels[i].k_prime << ',' << levels[i].x.size() << ',' << levels[i].edges_added << '\n';
  }
  return out.str();
}

RobustDd build_robust_dd(PointsPtr points, const IteratedFunction& f, const RobustDdOptions& options) {
  if (!(options.t > 1.0)) throw InputError("build_robust_dd: t must exceed 1");
  const std::size_t n = points->size();
  RobustDd out;
  BuildReport& report = out.report;
  report.n = n;
  report.d = points->dim();
  report.t_prime = std::sqrt(options.t);
  report.casualty_constant = kCasualtyConstant;
  report.edge_constant = options.edge_constant;
  if (n == 0) throw InputError("build_robust_dd: empty point set");

  TreeCoverOptions cover_options;
  cover_options.num_shifts = options.num_shifts == 0 ? points->dim() + 2 : options.num_shifts;
  cover_options.seed = options.seed;
  cover_options.pair_samples = options.pair_samples;
  out.cover = shifted_quadtree_cover(*points, cover_options);
  report.tau = out.cover.tau;
  report.stretch_bound = report.tau * report.t_prime;

  std::vector<std::pair<Index, Index>> edges = out.cover.edges();
  report.tree_edges = edges.size();
  if (static_cast<double>(n) >= f.k0()) report.f_star = f.f_star(static_cast<double>(n));
  for (std::size_t k_prime : level_sizes(f, n)) {
    DdLevel level = cut_level(out.cover, k_prime);
    if (level.x.size() >= 2) {
      auto ft = ft_spanner_edges(*points, level.x.items(), k_prime, report.t_prime);
      level.edges_added = ft.size();
      edges.insert(edges.end(), ft.begin(), ft.end());
    }
    report.levels.push_back(std::move(level));
  }
  out.graph = GeomGraph(points, std::move(edges), DuplicateEdges::merge);
  report.edges = out.graph.edge_count();
  const double limit = options.edge_constant * static_cast<double>(n) * static_cast<double>(report.f_star + 1);
  if (static_cast<double>(report.edges) > limit) {
    throw BuildError("build_robust_dd: " + std::to_string(report.edges) + " edges exceed C n (f*(n)+1) = " +
                     format_real(limit));
  }

  // Overall stretch: all sources when small, else a seeded sample.
  std::vector<Index> sources(n);
  for (Index i = 0; i < n; ++i) sources[i] = i;
  const std::size_t max_sources = std::max<std::size_t>(1, options.pair_samples / std::max<std::size_t>(1, n));
  if (n > 1 && n * (n - 1) / 2 > options.pair_samples && max_sources < n) {
    std::vector<Index> picked;
    std::mt19937_64 rng(options.seed ^ 0x5bd1e995ULL);
    std::sample(sources.begin(), sources.end(), std::back_inserter(picked), max_sources, rng);
    sources = std::move(picked);
    report.stretch_sampled = true;
  }
  report.measured_stretch = n < 2 ? 1.0 : max_stretch(out.graph, sources, out.graph.vertices(), Execution::parallel);
  return out;
}

std::size_t dd_level_for(const BuildReport& report, std::size_t k) {
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    if (report.levels[i].k_prime >= k) return i;
  }
  throw InputError("splus_dd: no level has k' >= " + std::to_string(k) +
                   "; robustness is vacuous for failure sets this large on " + std::to_string(report.n) +
                   " points");
}

double dd_casualty_bound(const RobustDd& built, std::size_t k) {
  if (k == 0) return 0.0;
  const auto& level = built.report.levels[dd_level_for(built.report, k)];
  const double kd = static_cast<double>(k);
  return kd + built.report.casualty_constant * static_cast<double>(built.cover.trees.size()) *
                  static_cast<double>(level.k_prime) * kd;
}

RobustnessCertificate splus_dd(const RobustDd& built, const VertexSet& failed) {
  const std::size_t n = built.graph.index_count();
  failed.check_range(n);
  RobustnessCertificate cert;
  cert.t = built.report.stretch_bound;
  cert.mode = SpannerMode::deletion;
  cert.failed = failed;
  if (failed.empty()) {
    cert.verified = true;
    return cert;
  }
  const DdLevel& level = built.report.levels[dd_level_for(built.report, failed.size())];

  std::vector<Index> killed(failed.begin(), failed.end());
  for (std::size_t i = 0; i < built.cover.trees.size(); ++i) {
    const BinaryTree& tree = built.cover.trees[i];
    const std::vector<int>& component_of = level.component_of[i];
    std::vector<char> dead(tree.size(), 0);
    auto kill = [&](int u) {
      const int c = component_of[static_cast<std::size_t>(u)];
      if (c >= 0) dead[static_cast<std::size_t>(c)] = 1;
    };
    for (Index s : failed) {
      for (int u : {tree.leaf_of[s], tree.internal_of[s]}) {
        if (u == BinaryTree::kNone) continue;
        if (!level.x.contains(s)) {
          kill(u);
          continue;
        }
        const auto [a, b] = tree.children[static_cast<std::size_t>(u)];
        for (int w : {tree.parent[static_cast<std::size_t>(u)], a, b}) {
          if (w != BinaryTree::kNone) kill(w);
        }
      }
    }
    for (std::size_t u = 0; u < tree.size(); ++u) {
      const int c = component_of[u];
      if (c >= 0 && dead[static_cast<std::size_t>(c)]) killed.push_back(tree.rep[u]);
    }
  }
  cert.casualties = VertexSet(std::move(killed));
  const SpannerCheck check = verify_certificate(built.graph, cert);
  cert.verified = check.ok;
  cert.sampled = check.sampled;
  return cert;
}

}  // namespace robspan
