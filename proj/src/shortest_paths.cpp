#include "robspan/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "robspan/error.hpp"

namespace robspan {

const std::vector<double>& DijkstraWorkspace::run(const GeomGraph& g, Index source) {
  const std::size_t n = g.index_count();
  if (source >= n || !g.present(source)) {
    throw InputError("shortest paths: source " + std::to_string(source) + " is not a vertex of the graph");
  }
  if (dist_.size() != n) {
    dist_.assign(n, kInfinity);
    touched_.clear();
  } else {
    for (Index v : touched_) dist_[v] = kInfinity;
    touched_.clear();
  }
  heap_.clear();
  auto cmp = std::greater<>{};
  dist_[source] = 0.0;
  touched_.push_back(source);
  heap_.emplace_back(0.0, source);
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), cmp);
    auto [d, u] = heap_.back();
    heap_.pop_back();
    if (d > dist_[u]) continue;
    for (const Neighbor& nb : g.neighbors(u)) {
      const double nd = d + nb.length;
      if (nd < dist_[nb.v]) {
        if (dist_[nb.v] == kInfinity) touched_.push_back(nb.v);
        dist_[nb.v] = nd;
        heap_.emplace_back(nd, nb.v);
        std::push_heap(heap_.begin(), heap_.end(), cmp);
      }
    }
  }
  return dist_;
}

std::vector<double> shortest_path_lengths(const GeomGraph& g, Index source) {
  DijkstraWorkspace ws;
  return ws.run(g, source);
}

double stretch(const GeomGraph& g, Index x, Index y) {
  if (x == y) throw InputError("stretch: endpoints must differ");
  if (!g.present(y)) throw InputError("stretch: target " + std::to_string(y) + " is not a vertex of the graph");
  const auto dist = shortest_path_lengths(g, x);
  return dist[y] / g.points().distance(x, y);
}

}  // namespace robspan
