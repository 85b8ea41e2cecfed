#include "robspan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "robspan/error.hpp"

namespace robspan {

double distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw InputError("distance: dimension mismatch (" + std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()) + ")");
  }
  if (p.size() == 1) return std::abs(p[0] - q[0]);
  double sum = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const double diff = p[a] - q[a];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

PointSet::PointSet(std::size_t dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw InputError("PointSet: dimension must be positive");
  if (coords_.size() % dim_ != 0) throw InputError("PointSet: coordinate count is not a multiple of dim");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InputError("PointSet: non-finite coordinate");
  }
  if (dim_ == 1) {
    std::sort(coords_.begin(), coords_.end());
    if (std::adjacent_find(coords_.begin(), coords_.end()) != coords_.end()) {
      throw InputError("PointSet: duplicate point");
    }
    return;
  }
  const std::size_t n = size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return (*this)[i]; };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ra = row(a), rb = row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  for (std::size_t i = 1; i < n; ++i) {
    auto ra = row(order[i - 1]), rb = row(order[i]);
    if (std::equal(ra.begin(), ra.end(), rb.begin())) throw InputError("PointSet: duplicate point");
  }
}

PointSet PointSet::line(std::vector<double> xs) { return PointSet(1, std::move(xs)); }

PointSet PointSet::integer_line(std::size_t n) {
  std::vector<double> xs(n);
  std::iota(xs.begin(), xs.end(), 1.0);
  return line(std::move(xs));
}

double PointSet::distance(std::size_t i, std::size_t j) const {
  return robspan::distance((*this)[i], (*this)[j]);
}

PointSet PointSet::subset(std::span<const Index> indices) const {
  std::vector<double> coords;
  coords.reserve(indices.size() * dim_);
  for (Index i : indices) {
    if (i >= size()) throw InputError("PointSet::subset: index out of range");
    auto p = (*this)[i];
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointSet(dim_, std::move(coords));
}

bool PointSet::integral() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == std::floor(c); });
}

VertexSet::VertexSet(std::vector<Index> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::all(std::size_t n) {
  VertexSet out;
  out.items_.resize(n);
  std::iota(out.items_.begin(), out.items_.end(), Index{0});
  return out;
}

bool VertexSet::contains(Index v) const { return std::binary_search(items_.begin(), items_.end(), v); }

VertexSet VertexSet::unite(const VertexSet& other) const {
  VertexSet out;
  out.items_.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

bool VertexSet::includes(const VertexSet& other) const {
  return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
}

VertexSet VertexSet::complement(std::size_t n) const { return all(n).minus(*this); }

void VertexSet::check_range(std::size_t n) const {
  if (!items_.empty() && items_.back() >= n) {
    throw InputError("vertex index " + std::to_string(items_.back()) + " out of range (n=" + std::to_string(n) +
                     ")");
  }
}

GeomGraph::GeomGraph(PointsPtr points, std::vector<std::pair<Index, Index>> edges, DuplicateEdges policy)
    : points_(std::move(points)) {
  if (!points_) throw InputError("GeomGraph: null point set");
  const std::size_t n = points_->size();
  present_.assign(n, 1);
  present_count_ = n;
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("GeomGraph: edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    }
    if (u == v) throw InputError("GeomGraph: self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    if (policy == DuplicateEdges::reject) {
      throw InputError("GeomGraph: duplicate edge {" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + "}");
    }
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) edges_.push_back({u, v, points_->distance(u, v)});
  build_adjacency();
}

GeomGraph::GeomGraph(PointsPtr points, std::vector<Edge> edges, std::vector<char> present)
    : points_(std::move(points)), present_(std::move(present)), edges_(std::move(edges)) {
  present_count_ = static_cast<std::size_t>(std::count(present_.begin(), present_.end(), char{1}));
  build_adjacency();
}

void GeomGraph::build_adjacency() {
  const std::size_t n = present_.size();
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.length};
    adjacency_[cursor[e.v]++] = {e.u, e.length};
  }
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
  }
}

VertexSet GeomGraph::vertices() const {
  std::vector<Index> out;
  out.reserve(present_count_);
  for (std::size_t v = 0; v < present_.size(); ++v) {
    if (present_[v]) out.push_back(static_cast<Index>(v));
  }
  return VertexSet(std::move(out));
}

std::size_t GeomGraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t u = 0; u + 1 < offsets_.size(); ++u) best = std::max(best, offsets_[u + 1] - offsets_[u]);
  return best;
}

bool GeomGraph::has_edge(Index u, Index v) const {
  if (u >= index_count() || v >= index_count()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), Neighbor{v, 0.0},
                            [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
}

GeomGraph remove_vertices(const GeomGraph& g, const VertexSet& removed) {
  removed.check_range(g.index_count());
  if (removed.empty()) return g;
  std::vector<char> present = g.present_;
  for (Index v : removed) present[v] = 0;
  std::vector<Edge> edges;
  edges.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) {
    if (present[e.u] && present[e.v]) edges.push_back(e);
  }
  return GeomGraph(g.points_, std::move(edges), std::move(present));
}

GeomGraph restrict_to(const GeomGraph& g, const VertexSet& keep) {
  keep.check_range(g.index_count());
  return remove_vertices(g, g.vertices().minus(keep));
}

}  // namespace robspan
