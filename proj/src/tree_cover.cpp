#include "robspan/tree_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "robspan/error.hpp"
#include "robspan/kernels.hpp"

namespace robspan {

std::vector<std::vector<int>> BinaryTree::adjacency() const {
  std::vector<std::vector<int>> adj(size());
  for (std::size_t u = 0; u < size(); ++u) {
    if (parent[u] != kNone) {
      adj[u].push_back(parent[u]);
      adj[static_cast<std::size_t>(parent[u])].push_back(static_cast<int>(u));
    }
  }
  return adj;
}

std::vector<std::pair<Index, Index>> BinaryTree::point_edges() const {
  std::vector<std::pair<Index, Index>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    if (parent[u] == kNone) continue;
    const Index a = rep[u], b = rep[static_cast<std::size_t>(parent[u])];
    if (a != b) out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

double BinaryTree::path_length(const PointSet& points, Index x, Index y) const {
  int a = leaf_of[x], b = leaf_of[y];
  // Walk both leaves up to their lowest common ancestor.
  auto depth = [&](int u) {
    int d = 0;
    while (parent[static_cast<std::size_t>(u)] != kNone) u = parent[static_cast<std::size_t>(u)], ++d;
    return d;
  };
  int da = depth(a), db = depth(b);
  double length = 0.0;
  auto step = [&](int& u) {
    const int p = parent[static_cast<std::size_t>(u)];
    length += points.distance(rep[static_cast<std::size_t>(u)], rep[static_cast<std::size_t>(p)]);
    u = p;
  };
  while (da > db) step(a), --da;
  while (db > da) step(b), --db;
  while (a != b) step(a), step(b);
  return length;
}

std::vector<std::pair<Index, Index>> TreeCover::edges() const {
  std::vector<std::pair<Index, Index>> out;
  for (const BinaryTree& t : trees) {
    auto part = t.point_edges();
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

constexpr int kMaxDepth = 2000;

class QuadtreeBuilder {
 public:
  QuadtreeBuilder(const PointSet& points, BinaryTree& tree) : points_(points), tree_(tree) {}

  int build(std::vector<Index> members, std::vector<double> origin, double side, int depth) {
    const std::size_t d = points_.dim();
    while (members.size() > 1) {
      if (depth > kMaxDepth) return split_by_index(members);
      const double half = side / 2.0;
      std::vector<std::pair<std::uint64_t, Index>> coded;
      coded.reserve(members.size());
      for (Index p : members) {
        std::uint64_t code = 0;
        for (std::size_t a = 0; a < d; ++a) {
          if (points_.coord(p, a) >= origin[a] + half) code |= std::uint64_t{1} << a;
        }
        coded.emplace_back(code, p);
      }
      std::stable_sort(coded.begin(), coded.end(),
                       [](const auto& l, const auto& r) { return l.first < r.first; });
      if (coded.front().first == coded.back().first) {
        // One occupied child: descend without creating a node.
        const std::uint64_t code = coded.front().first;
        for (std::size_t a = 0; a < d; ++a) {
          if (code >> a & 1u) origin[a] += half;
        }
        side = half;
        ++depth;
        continue;
      }
      std::vector<int> subtrees;
      std::size_t begin = 0;
      while (begin < coded.size()) {
        std::size_t end = begin;
        std::vector<Index> group;
        while (end < coded.size() && coded[end].first == coded[begin].first) group.push_back(coded[end++].second);
        std::vector<double> child_origin = origin;
        for (std::size_t a = 0; a < d; ++a) {
          if (coded[begin].first >> a & 1u) child_origin[a] += half;
        }
        subtrees.push_back(build(std::move(group), std::move(child_origin), half, depth + 1));
        begin = end;
      }
      return comb(subtrees);
    }
    return leaf(members.front());
  }

 private:
  int new_node() {
    tree_.parent.push_back(BinaryTree::kNone);
    tree_.children.emplace_back(BinaryTree::kNone, BinaryTree::kNone);
    tree_.rep.push_back(0);
    return static_cast<int>(tree_.parent.size() - 1);
  }

  int leaf(Index p) {
    const int u = new_node();
    tree_.rep[static_cast<std::size_t>(u)] = p;
    return u;
  }

  int join(int a, int b) {
    const int u = new_node();
    tree_.children[static_cast<std::size_t>(u)] = {a, b};
    tree_.parent[static_cast<std::size_t>(a)] = u;
    tree_.parent[static_cast<std::size_t>(b)] = u;
    return u;
  }

  int comb(const std::vector<int>& subtrees) {
    int cur = subtrees.front();
    for (std::size_t i = 1; i < subtrees.size(); ++i) cur = join(cur, subtrees[i]);
    return cur;
  }

  // Floating-point exhaustion fallback; not reached for distinct points at
  // ordinary scales.
  int split_by_index(std::vector<Index> members) {
    if (members.size() == 1) return leaf(members.front());
    const auto mid = members.begin() + static_cast<std::ptrdiff_t>(members.size() / 2);
    std::vector<Index> left(members.begin(), mid), right(mid, members.end());
    const int l = split_by_index(std::move(left));
    return join(l, split_by_index(std::move(right)));
  }

  const PointSet& points_;
  BinaryTree& tree_;
};

// Each leaf hands its point upward; an internal node keeps the lower of its
// children's offers and passes the other on, so every point is used by at
// most one internal node.
void assign_representatives(BinaryTree& tree) {
  std::vector<Index> offer(tree.size());
  // Nodes are created children-first, so index order is a post-order.
  for (std::size_t u = 0; u < tree.size(); ++u) {
    if (tree.is_leaf(static_cast<int>(u))) {
      offer[u] = tree.rep[u];
      continue;
    }
    const auto [a, b] = tree.children[u];
    const Index oa = offer[static_cast<std::size_t>(a)], ob = offer[static_cast<std::size_t>(b)];
    tree.rep[u] = std::min(oa, ob);
    offer[u] = std::max(oa, ob);
  }
}

void index_points(BinaryTree& tree, std::size_t point_count) {
  tree.leaf_of.assign(point_count, BinaryTree::kNone);
  tree.internal_of.assign(point_count, BinaryTree::kNone);
  for (std::size_t u = 0; u < tree.size(); ++u) {
    auto& slot = tree.is_leaf(static_cast<int>(u)) ? tree.leaf_of : tree.internal_of;
    if (slot[tree.rep[u]] != BinaryTree::kNone) {
      throw BuildError("tree cover: point " + std::to_string(tree.rep[u]) + " occurs twice in the same role");
    }
    slot[tree.rep[u]] = static_cast<int>(u);
  }
}

}  // namespace

void check_tree(const BinaryTree& tree, std::size_t point_count) {
  std::vector<int> leaves(point_count, 0), internals(point_count, 0);
  for (std::size_t u = 0; u < tree.size(); ++u) {
    const auto [a, b] = tree.children[u];
    if ((a == BinaryTree::kNone) != (b == BinaryTree::kNone)) throw BuildError("tree cover: node with one child");
    if (tree.rep[u] >= point_count) throw BuildError("tree cover: representative out of range");
    (a == BinaryTree::kNone ? leaves : internals)[tree.rep[u]] += 1;
  }
  for (std::size_t p = 0; p < point_count; ++p) {
    if (leaves[p] != 1) throw BuildError("tree cover: point " + std::to_string(p) + " is not exactly one leaf");
    if (internals[p] > 1) throw BuildError("tree cover: point " + std::to_string(p) + " is internal more than once");
  }
}

std::pair<double, std::size_t> measure_tree_stretch(const std::vector<BinaryTree>& trees, const PointSet& points,
                                                    std::size_t pair_samples, std::uint64_t seed) {
  const std::size_t n = points.size();
  if (n < 2 || trees.empty()) return {1.0, 0};
  std::vector<std::pair<Index, Index>> pairs;
  const std::size_t all = n * (n - 1) / 2;
  if (all <= pair_samples) {
    pairs.reserve(all);
    for (Index x = 0; x < n; ++x) {
      for (Index y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    pairs.reserve(pair_samples);
    while (pairs.size() < pair_samples) {
      const Index x = pick(rng), y = pick(rng);
      if (x != y) pairs.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
  double tau = 1.0;
#pragma omp parallel for reduction(max : tau) schedule(static) num_threads(worker_threads())
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto [x, y] = pairs[static_cast<std::size_t>(i)];
    double best = kInfinity;
    for (const BinaryTree& t : trees) best = std::min(best, t.path_length(points, x, y));
    tau = std::max(tau, best / points.distance(x, y));
  }
  return {tau, pairs.size()};
}

TreeCover shifted_quadtree_cover(const PointSet& points, const TreeCoverOptions& options) {
  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  if (n == 0) throw InputError("shifted_quadtree_cover: empty point set");
  if (options.num_shifts == 0) throw InputError("shifted_quadtree_cover: need at least one tree");

  std::vector<double> lo(d, kInfinity), hi(d, -kInfinity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      lo[a] = std::min(lo[a], points.coord(i, a));
      hi[a] = std::max(hi[a], points.coord(i, a));
    }
  }
  double extent = 0.0;
  for (std::size_t a = 0; a < d; ++a) extent = std::max(extent, hi[a] - lo[a]);
  if (extent == 0.0) extent = 1.0;

  TreeCover cover;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> shift(0.0, extent);
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), Index{0});
  for (std::size_t s = 0; s < options.num_shifts; ++s) {
    // Root cube of side 2*extent, its corner pulled back by a random shift,
    // still contains every point.
    std::vector<double> origin(d);
    for (std::size_t a = 0; a < d; ++a) origin[a] = lo[a] - shift(rng);
    BinaryTree tree;
    QuadtreeBuilder builder(points, tree);
    tree.root = builder.build(all, std::move(origin), 2.0 * extent, 0);
    assign_representatives(tree);
    index_points(tree, n);
    check_tree(tree, n);
    cover.trees.push_back(std::move(tree));
  }
  std::tie(cover.tau, cover.pairs_measured) =
      measure_tree_stretch(cover.trees, points, options.pair_samples, options.seed ^ 0x9e3779b97f4a7c15ULL);
  return cover;
}

}  // namespace robspan
