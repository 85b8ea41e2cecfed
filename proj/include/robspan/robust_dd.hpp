#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "robspan/certificate.hpp"
#include "robspan/geometry.hpp"
#include "robspan/iterated.hpp"
#include "robspan/tree_cover.hpp"

namespace robspan {

struct RobustDdOptions {
  double t = 4.0;              // requested stretch; trees are cut for t' = sqrt(t)
  std::size_t num_shifts = 0;  // 0 picks d + 2
  std::uint64_t seed = 0;
  std::size_t pair_samples = 100000;
  double edge_constant = 32.0;  // C in |E| <= C n (f*(n) + 1)
};

/// One separator level: every tree cut into components of at most
/// k_prime nodes, separator points pooled into x.
struct DdLevel {
  std::size_t k_prime = 0;
  VertexSet x;
  // Per tree, node -> component after removing every node whose point is
  // in x; -1 for removed nodes.
  std::vector<std::vector<int>> component_of;
  std::size_t edges_added = 0;
};

struct BuildReport {
  std::size_t n = 0;
  std::size_t d = 0;
  double tau = 1.0;
  double t_prime = 1.0;
  double stretch_bound = 1.0;     // tau * t'
  double measured_stretch = 1.0;  // over all or sampled pairs
  bool stretch_sampled = false;
  std::size_t tree_edges = 0;
  std::size_t edges = 0;
  std::size_t f_star = 0;
  double edge_constant = 0.0;
  double casualty_constant = 0.0;  // c in |S+| <= k + c p k' k
  std::vector<DdLevel> levels;

  /// Header row n,d,tau_measured,stretch_bound and its values, then
  /// level,k_prime,x_size,edges_added rows.
  std::string to_csv() const;
};

struct RobustDd {
  GeomGraph graph;
  TreeCover cover;
  BuildReport report;
};

/// Tree-cover edges plus, for each level k' in {floor(f^i(k0))}, a
/// k'-fault-tolerant sqrt(t)-spanner on that level's separator points.
RobustDd build_robust_dd(PointsPtr points, const IteratedFunction& f, const RobustDdOptions& options = {});

/// Casualties of S at the smallest level k' >= |S|: a point outside X
/// kills the components holding its nodes; a point of X kills the
/// components next to its nodes. Verified in deletion mode at the
/// report's stretch bound. Throws InputError when no level is large enough.
RobustnessCertificate splus_dd(const RobustDd& built, const VertexSet& failed);

/// k + c p k' k with c = report.casualty_constant.
double dd_casualty_bound(const RobustDd& built, std::size_t k);

/// Index of the level used for |S| = k, or throws InputError.
std::size_t dd_level_for(const BuildReport& report, std::size_t k);

}  // namespace robspan
