#include "robspan/centroid.hpp"

#include <algorithm>

#include "robspan/error.hpp"

namespace robspan {

std::size_t label_components(const std::vector<std::vector<int>>& adjacency, const std::vector<char>& removed,
                             std::vector<int>& component_of) {
  const std::size_t n = adjacency.size();
  component_of.assign(n, -1);
  std::size_t count = 0;
  std::vector<int> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (removed[s] || component_of[s] != -1) continue;
    const int id = static_cast<int>(count++);
    component_of[s] = id;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adjacency[static_cast<std::size_t>(u)]) {
        if (!removed[static_cast<std::size_t>(w)] && component_of[static_cast<std::size_t>(w)] == -1) {
          component_of[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

namespace {

// Reusable buffers sized to the whole forest; only touched entries are reset.
struct Scratch {
  std::vector<int> members;
  std::vector<int> parent_of;
  std::vector<std::size_t> subtree;
  std::vector<std::size_t> heaviest_child;
};

// Centroid of the component containing `start`, avoiding removed nodes.
// Leaves the component in scratch.members.
int find_centroid(const std::vector<std::vector<int>>& adjacency, const std::vector<char>& removed, int start,
                  Scratch& scratch) {
  auto& members = scratch.members;
  auto& parent_of = scratch.parent_of;
  members.clear();
  parent_of.clear();
  std::vector<std::pair<int, int>> stack{{start, -1}};
  while (!stack.empty()) {
    auto [u, p] = stack.back();
    stack.pop_back();
    members.push_back(u);
    parent_of.push_back(p);
    for (int w : adjacency[static_cast<std::size_t>(u)]) {
      if (w != p && !removed[static_cast<std::size_t>(w)]) stack.emplace_back(w, u);
    }
  }
  const std::size_t total = members.size();
  auto& subtree = scratch.subtree;
  auto& heaviest = scratch.heaviest_child;
  for (std::size_t i = total; i-- > 0;) {
    const auto u = static_cast<std::size_t>(members[i]);
    subtree[u] += 1;
    const int p = parent_of[i];
    if (p >= 0) {
      subtree[static_cast<std::size_t>(p)] += subtree[u];
      heaviest[static_cast<std::size_t>(p)] = std::max(heaviest[static_cast<std::size_t>(p)], subtree[u]);
    }
  }
  int best = -1;
  for (int u : members) {
    const auto uu = static_cast<std::size_t>(u);
    const std::size_t worst = std::max(total - subtree[uu], heaviest[uu]);
    if (2 * worst <= total && (best == -1 || u < best)) best = u;
  }
  for (int u : members) {
    subtree[static_cast<std::size_t>(u)] = 0;
    heaviest[static_cast<std::size_t>(u)] = 0;
  }
  if (best == -1) throw BuildError("centroid_decompose: no centroid found (input is not a forest)");
  return best;
}

}  // namespace

SeparatorSet centroid_decompose(const std::vector<std::vector<int>>& adjacency, std::size_t k_prime) {
  if (k_prime == 0) throw InputError("centroid_decompose: k_prime must be at least 1");
  const std::size_t n = adjacency.size();
  SeparatorSet out;
  out.k_prime = k_prime;
  std::vector<char> removed(n, 0);
  std::vector<char> settled(n, 0);
  std::vector<int> pending;
  for (std::size_t s = 0; s < n; ++s) pending.push_back(static_cast<int>(s));
  Scratch scratch{{}, {}, std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0)};
  const auto& members = scratch.members;
  // Each unsettled pop either settles a small component or removes one
  // centroid and queues the pieces around it.
  while (!pending.empty()) {
    const int start = pending.back();
    pending.pop_back();
    if (removed[static_cast<std::size_t>(start)] || settled[static_cast<std::size_t>(start)]) continue;
    const int c = find_centroid(adjacency, removed, start, scratch);
    if (members.size() <= k_prime) {
      for (int u : members) settled[static_cast<std::size_t>(u)] = 1;
      continue;
    }
    removed[static_cast<std::size_t>(c)] = 1;
    out.separators.push_back(c);
    for (int w : adjacency[static_cast<std::size_t>(c)]) {
      if (!removed[static_cast<std::size_t>(w)]) pending.push_back(w);
    }
  }
  const std::size_t count = label_components(adjacency, removed, out.component_of);
  out.component_sizes.assign(count, 0);
  for (int id : out.component_of) {
    if (id >= 0) ++out.component_sizes[static_cast<std::size_t>(id)];
  }
  return out;
}

}  // namespace robspan
