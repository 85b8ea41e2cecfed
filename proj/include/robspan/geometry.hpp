#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace robspan {

using Index = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Euclidean distance between two points of equal dimension.
/// Throws InputError on a dimension mismatch.
double distance(std::span<const double> p, std::span<const double> q);

/// Ordered point set in R^d, stored row-major.
///
/// One-dimensional sets are kept sorted ascending, so index equals rank.
/// Duplicate points and non-finite coordinates are rejected.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, std::vector<double> coords);

  static PointSet line(std::vector<double> xs);
  /// The integer points 1, 2, ..., n.
  static PointSet integer_line(std::size_t n);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double coord(std::size_t i, std::size_t axis) const { return coords_[i * dim_ + axis]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  double distance(std::size_t i, std::size_t j) const;

  /// Points at the given (sorted, distinct) indices, in that order.
  PointSet subset(std::span<const Index> indices) const;

  /// True when every coordinate is an integer.
  bool integral() const noexcept;

 private:
  std::size_t dim_ = 1;
  std::vector<double> coords_;
};

using PointsPtr = std::shared_ptr<const PointSet>;

inline PointsPtr share(PointSet points) {
  return std::make_shared<const PointSet>(std::move(points));
}

/// Sorted set of distinct vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and deduplicates.
  explicit VertexSet(std::vector<Index> items);
  VertexSet(std::initializer_list<Index> items) : VertexSet(std::vector<Index>(items)) {}

  static VertexSet all(std::size_t n);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(Index v) const;
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  Index operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Index>& items() const noexcept { return items_; }

  VertexSet unite(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool includes(const VertexSet& other) const;
  /// {0..n-1} minus this set.
  VertexSet complement(std::size_t n) const;

  /// Throws InputError if any index is >= n.
  void check_range(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Index> items_;
};

struct Edge {
  Index u;
  Index v;
  double length;
};

struct Neighbor {
  Index v;
  double length;
};

enum class DuplicateEdges { reject, merge };

/// Undirected geometric graph over a shared PointSet.
///
/// Vertices are addressed by index into the point set. A graph may have
/// vertices marked absent (after remove_vertices); absent vertices keep
/// their index but have no incident edges. Immutable once constructed.
class GeomGraph {
 public:
  GeomGraph() = default;
  GeomGraph(PointsPtr points, std::vector<std::pair<Index, Index>> edges,
            DuplicateEdges policy = DuplicateEdges::reject);

  const PointSet& points() const noexcept { return *points_; }
  const PointsPtr& points_ptr() const noexcept { return points_; }

  /// Size of the index space (including absent vertices).
  std::size_t index_count() const noexcept { return present_.size(); }
  std::size_t vertex_count() const noexcept { return present_count_; }
  bool present(Index v) const { return v < present_.size() && present_[v] != 0; }
  VertexSet vertices() const;

  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges with u < v, sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// Neighbours sorted by index.
  std::span<const Neighbor> neighbors(Index u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  std::size_t degree(Index u) const { return offsets_[u + 1] - offsets_[u]; }
  std::size_t max_degree() const;
  bool has_edge(Index u, Index v) const;

  friend GeomGraph remove_vertices(const GeomGraph& g, const VertexSet& removed);

 private:
  GeomGraph(PointsPtr points, std::vector<Edge> edges, std::vector<char> present);
  void build_adjacency();

  PointsPtr points_;
  std::vector<char> present_;
  std::size_t present_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

/// Subgraph induced by V \ removed. Indices are preserved.
GeomGraph remove_vertices(const GeomGraph& g, const VertexSet& removed);

/// Subgraph induced by keep (which must be present vertices).
GeomGraph restrict_to(const GeomGraph& g, const VertexSet& keep);

}  // namespace robspan
