#include "robspan/vertex_cover.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <queue>

#include "robspan/error.hpp"

namespace robspan {
namespace {

// Local graph on non-isolated vertices, ids 0..size-1.
struct LocalGraph {
  std::vector<Index> label;  // local id -> vertex index
  std::vector<std::vector<std::size_t>> adj;
};

LocalGraph localize(const std::vector<std::pair<Index, Index>>& edges) {
  LocalGraph lg;
  for (auto [u, v] : edges) {
    lg.label.push_back(u);
    lg.label.push_back(v);
  }
  std::sort(lg.label.begin(), lg.label.end());
  lg.label.erase(std::unique(lg.label.begin(), lg.label.end()), lg.label.end());
  lg.adj.resize(lg.label.size());
  auto id = [&](Index v) {
    return static_cast<std::size_t>(std::lower_bound(lg.label.begin(), lg.label.end(), v) - lg.label.begin());
  };
  for (auto [u, v] : edges) {
    const std::size_t a = id(u), b = id(v);
    lg.adj[a].push_back(b);
    lg.adj[b].push_back(a);
  }
  for (auto& nbrs : lg.adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return lg;
}

using Bits = std::bitset<kBranchAndBoundLimit>;

class BranchAndBound {
 public:
  explicit BranchAndBound(const LocalGraph& lg) : n_(lg.adj.size()), adj_(n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t u : lg.adj[v]) adj_[v].set(u);
    }
  }

  Bits solve() {
    Bits alive;
    for (std::size_t v = 0; v < n_; ++v) alive.set(v);
    best_ = greedy(alive);
    best_size_ = best_.count();
    recurse(alive, Bits{});
    return best_;
  }

 private:
  std::size_t degree(std::size_t v, const Bits& alive) const { return (adj_[v] & alive).count(); }

  // Max-degree greedy cover; an initial upper bound.
  Bits greedy(Bits alive) const {
    Bits cover;
    while (true) {
      std::size_t best_v = n_, best_d = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        if (!alive.test(v)) continue;
        const std::size_t d = degree(v, alive);
        if (d > best_d) best_d = d, best_v = v;
      }
      if (best_v == n_) return cover;
      cover.set(best_v);
      alive.reset(best_v);
    }
  }

  // Size of a greedy maximal matching: a lower bound on any cover.
  std::size_t matching_bound(Bits alive) const {
    std::size_t size = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!alive.test(v)) continue;
      const Bits nbrs = adj_[v] & alive;
      if (nbrs.none()) continue;
      const std::size_t u = nbrs._Find_first();
      alive.reset(v);
      alive.reset(u);
      ++size;
    }
    return size;
  }

  void recurse(Bits alive, Bits cover) {
    // Degree-0 and degree-1 reductions to a fixed point.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < n_; ++v) {
        if (!alive.test(v)) continue;
        const Bits nbrs = adj_[v] & alive;
        const std::size_t d = nbrs.count();
        if (d == 0) {
          alive.reset(v);
          changed = true;
        } else if (d == 1) {
          const std::size_t u = nbrs._Find_first();
          cover.set(u);
          alive.reset(u);
          alive.reset(v);
          changed = true;
        }
      }
      if (cover.count() >= best_size_) return;
    }
    if (alive.none()) {
      best_ = cover;
      best_size_ = cover.count();
      return;
    }
    if (cover.count() + matching_bound(alive) >= best_size_) return;

    std::size_t pivot = n_, pivot_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!alive.test(v)) continue;
      const std::size_t d = degree(v, alive);
      if (d > pivot_deg) pivot_deg = d, pivot = v;
    }
    {
      Bits a = alive, c = cover;
      a.reset(pivot);
      c.set(pivot);
      recurse(a, c);
    }
    {
      const Bits nbrs = adj_[pivot] & alive;
      Bits a = alive & ~nbrs;
      a.reset(pivot);
      recurse(a, cover | nbrs);
    }
  }

  std::size_t n_;
  std::vector<Bits> adj_;
  Bits best_;
  std::size_t best_size_ = std::numeric_limits<std::size_t>::max();
};

std::vector<std::size_t> branch_and_bound_local(const LocalGraph& lg) {
  if (lg.adj.size() > kBranchAndBoundLimit) {
    throw InputError("vertex cover: branch and bound limited to " + std::to_string(kBranchAndBoundLimit) +
                     " vertices");
  }
  const Bits best = BranchAndBound(lg).solve();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < lg.adj.size(); ++v) {
    if (best.test(v)) out.push_back(v);
  }
  return out;
}

// Hopcroft-Karp on a 2-coloured component, then König's construction.
std::vector<std::size_t> konig_cover(const LocalGraph& lg, const std::vector<std::size_t>& members,
                                     const std::vector<int>& color) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> left;
  for (std::size_t v : members) {
    if (color[v] == 0) left.push_back(v);
  }
  const std::size_t n = lg.adj.size();
  std::vector<std::size_t> match(n, kNone);
  std::vector<std::size_t> layer(n, kNone);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u : left) {
      if (match[u] == kNone) {
        layer[u] = 0;
        q.push(u);
      } else {
        layer[u] = kNone;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t w : lg.adj[u]) {
        const std::size_t mate = match[w];
        if (mate == kNone) {
          found = true;
        } else if (layer[mate] == kNone) {
          layer[mate] = layer[u] + 1;
          q.push(mate);
        }
      }
    }
    return found;
  };
  // Iterative DFS along the BFS layering.
  auto augment = [&](std::size_t root) {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == lg.adj[u].size()) {
        layer[u] = kNone;
        stack.pop_back();
        continue;
      }
      const std::size_t w = lg.adj[u][next++];
      const std::size_t mate = match[w];
      if (mate == kNone) {
        // Flip the alternating path recorded on the stack.
        std::size_t target = w;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          const std::size_t lu = it->first;
          const std::size_t prev = match[lu];
          match[lu] = target;
          match[target] = lu;
          target = prev;
        }
        return true;
      }
      if (layer[mate] == layer[u] + 1) stack.emplace_back(mate, 0);
    }
    return false;
  };
  while (bfs()) {
    for (std::size_t u : left) {
      if (match[u] == kNone) augment(u);
    }
  }

  // Vertices reachable from free left vertices by alternating paths.
  std::vector<char> reached(n, 0);
  std::queue<std::size_t> q;
  for (std::size_t u : left) {
    if (match[u] == kNone) {
      reached[u] = 1;
      q.push(u);
    }
  }
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t w : lg.adj[u]) {
      if (reached[w] || match[u] == w) continue;
      reached[w] = 1;
      const std::size_t mate = match[w];
      if (mate != kNone && !reached[mate]) {
        reached[mate] = 1;
        q.push(mate);
      }
    }
  }
  std::vector<std::size_t> cover;
  for (std::size_t v : members) {
    if ((color[v] == 0 && !reached[v]) || (color[v] == 1 && reached[v])) cover.push_back(v);
  }
  return cover;
}

std::vector<std::size_t> matching_cover_local(const LocalGraph& lg, const std::vector<std::size_t>& members) {
  std::vector<char> used(lg.adj.size(), 0);
  std::vector<std::size_t> cover;
  for (std::size_t u : members) {
    if (used[u]) continue;
    for (std::size_t w : lg.adj[u]) {
      if (!used[w]) {
        used[u] = used[w] = 1;
        cover.push_back(u);
        cover.push_back(w);
        break;
      }
    }
  }
  return cover;
}

}  // namespace

VertexSet vertex_cover_2approx(const ConflictGraph& h) {
  std::vector<std::pair<Index, Index>> edges = h.edges;
  std::sort(edges.begin(), edges.end());
  std::vector<Index> matched;
  auto is_used = [&](Index v) { return std::binary_search(matched.begin(), matched.end(), v); };
  for (auto [u, v] : edges) {
    if (is_used(u) || is_used(v)) continue;
    matched.insert(std::upper_bound(matched.begin(), matched.end(), u), u);
    matched.insert(std::upper_bound(matched.begin(), matched.end(), v), v);
  }
  return VertexSet(std::move(matched));
}

VertexSet vertex_cover_branch_and_bound(const ConflictGraph& h) {
  const LocalGraph lg = localize(h.edges);
  std::vector<Index> out;
  for (std::size_t v : branch_and_bound_local(lg)) out.push_back(lg.label[v]);
  return VertexSet(std::move(out));
}

CoverResult min_vertex_cover(const ConflictGraph& h, std::size_t exact_cap) {
  const LocalGraph lg = localize(h.edges);
  const std::size_t n = lg.adj.size();
  std::vector<int> color(n, -1);
  std::vector<Index> cover;
  CoverResult result;
  result.exact = true;

  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    std::vector<std::size_t> members{start};
    color[start] = 0;
    bool bipartite = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t u = members[head];
      for (std::size_t w : lg.adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          members.push_back(w);
        } else if (color[w] == color[u]) {
          bipartite = false;
        }
      }
    }
    std::sort(members.begin(), members.end());

    std::vector<std::size_t> part;
    if (bipartite) {
      part = konig_cover(lg, members, color);
    } else if (members.size() <= std::min(exact_cap, kBranchAndBoundLimit)) {
      LocalGraph sub;
      sub.adj.resize(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t w : lg.adj[members[i]]) {
          sub.adj[i].push_back(static_cast<std::size_t>(
              std::lower_bound(members.begin(), members.end(), w) - members.begin()));
        }
      }
      for (std::size_t i : branch_and_bound_local(sub)) part.push_back(members[i]);
    } else {
      part = matching_cover_local(lg, members);
      result.exact = false;
    }
    for (std::size_t v : part) cover.push_back(lg.label[v]);
  }
  result.cover = VertexSet(std::move(cover));
  return result;
}

}  // namespace robspan
