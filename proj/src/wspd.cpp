#include "robspan/wspd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "robspan/error.hpp"

namespace robspan {

namespace {

struct SplitNode {
  std::size_t begin, end;
  int left = -1, right = -1;
  std::vector<double> center;
  double radius = 0.0;
};

class FairSplitTree {
 public:
  FairSplitTree(const PointSet& points, std::vector<Index> order) : points_(points), order_(std::move(order)) {
    if (!order_.empty()) build(0, order_.size());
  }

  std::vector<Index>& order() { return order_; }
  const SplitNode& node(int u) const { return nodes_[static_cast<std::size_t>(u)]; }
  std::size_t size() const { return nodes_.size(); }

 private:
  int build(std::size_t begin, std::size_t end) {
    const std::size_t d = points_.dim();
    std::vector<double> lo(d, kInfinity), hi(d, -kInfinity);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t a = 0; a < d; ++a) {
        lo[a] = std::min(lo[a], points_.coord(order_[i], a));
        hi[a] = std::max(hi[a], points_.coord(order_[i], a));
      }
    }
    SplitNode node;
    node.begin = begin;
    node.end = end;
    node.center.resize(d);
    double diag = 0.0;
    std::size_t widest = 0;
    for (std::size_t a = 0; a < d; ++a) {
      node.center[a] = (lo[a] + hi[a]) / 2.0;
      diag += (hi[a] - lo[a]) * (hi[a] - lo[a]);
      if (hi[a] - lo[a] > hi[widest] - lo[widest]) widest = a;
    }
    node.radius = std::sqrt(diag) / 2.0;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(node));
    if (end - begin == 1) return id;

    // Split the widest side at its midpoint; both halves are non-empty
    // because the extreme points lie strictly on either side.
    const double mid = (lo[widest] + hi[widest]) / 2.0;
    auto first = order_.begin() + static_cast<std::ptrdiff_t>(begin);
    auto last = order_.begin() + static_cast<std::ptrdiff_t>(end);
    auto cut = std::stable_partition(first, last, [&](Index p) { return points_.coord(p, widest) < mid; });
    std::size_t split = static_cast<std::size_t>(cut - order_.begin());
    if (split == begin || split == end) split = begin + (end - begin) / 2;
    const int l = build(begin, split);
    const int r = build(split, end);
    nodes_[static_cast<std::size_t>(id)].left = l;
    nodes_[static_cast<std::size_t>(id)].right = r;
    return id;
  }

  const PointSet& points_;
  std::vector<Index> order_;
  std::vector<SplitNode> nodes_;
};

bool separated(const SplitNode& u, const SplitNode& v, double s) {
  const double r = std::max(u.radius, v.radius);
  return distance(u.center, v.center) - 2.0 * r >= s * r;
}

void find_pairs(const FairSplitTree& tree, int u, int v, double s, std::vector<WsPair>& out) {
  // Explicit stack: degenerate inputs can make the recursion deep.
  std::vector<std::pair<int, int>> stack{{u, v}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const SplitNode& na = tree.node(a);
    const SplitNode& nb = tree.node(b);
    if (separated(na, nb, s)) {
      out.push_back({na.begin, na.end, nb.begin, nb.end});
      continue;
    }
    if (na.radius < nb.radius || (na.radius == nb.radius && na.left < 0)) {
      std::swap(a, b);
    }
    const SplitNode& big = tree.node(a);
    stack.emplace_back(big.right, b);
    stack.emplace_back(big.left, b);
  }
}

}  // namespace

Wspd wspd(const PointSet& points, std::span<const Index> subset, double s) {
  if (!(s > 0.0)) throw InputError("wspd: separation must be positive");
  FairSplitTree tree(points, std::vector<Index>(subset.begin(), subset.end()));
  Wspd result;
  result.separation = s;
  for (std::size_t u = 0; u < tree.size(); ++u) {
    const SplitNode& node = tree.node(static_cast<int>(u));
    if (node.left >= 0) find_pairs(tree, node.left, node.right, s, result.pairs);
  }
  result.order = std::move(tree.order());
  return result;
}

Wspd wspd(const PointSet& points, double s) {
  std::vector<Index> all(points.size());
  std::iota(all.begin(), all.end(), Index{0});
  return wspd(points, all, s);
}

double ft_separation(double t_prime) {
  if (!(t_prime > 1.0)) throw InputError("ft_spanner: t' must exceed 1");
  return 4.0 * (t_prime + 1.0) / (t_prime - 1.0);
}

std::vector<std::pair<Index, Index>> ft_spanner_edges(const PointSet& points, std::span<const Index> subset,
                                                      std::size_t k_prime, double t_prime) {
  const Wspd dec = wspd(points, subset, ft_separation(t_prime));
  const std::size_t m = k_prime + 1;
  std::vector<std::pair<Index, Index>> edges;
  auto add = [&](Index x, Index y) { edges.emplace_back(std::min(x, y), std::max(x, y)); };
  for (const WsPair& pair : dec.pairs) {
    std::vector<Index> a(dec.a(pair).begin(), dec.a(pair).end());
    std::vector<Index> b(dec.b(pair).begin(), dec.b(pair).end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.size() >= m && b.size() >= m) {
      for (std::size_t i = 0; i < m; ++i) add(a[i], b[i]);
      continue;
    }
    if (a.size() < m) {
      for (Index x : a) {
        for (std::size_t i = 0; i < std::min(m, b.size()); ++i) add(x, b[i]);
      }
    }
    if (b.size() < m) {
      for (Index y : b) {
        for (std::size_t i = 0; i < std::min(m, a.size()); ++i) add(a[i], y);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() > m * m * dec.pairs.size()) throw BuildError("ft_spanner: edge bound exceeded");
  return edges;
}

GeomGraph ft_spanner(PointsPtr points, std::size_t k_prime, double t_prime) {
  std::vector<Index> all(points->size());
  std::iota(all.begin(), all.end(), Index{0});
  auto edges = ft_spanner_edges(*points, all, k_prime, t_prime);
  return GeomGraph(std::move(points), std::move(edges));
}

}  // namespace robspan
