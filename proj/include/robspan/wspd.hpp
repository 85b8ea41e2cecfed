#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "robspan/geometry.hpp"

namespace robspan {

/// Two point groups, each a contiguous range of Wspd::order.
struct WsPair {
  std::size_t a_begin, a_end;
  std::size_t b_begin, b_end;

  std::size_t a_size() const noexcept { return a_end - a_begin; }
  std::size_t b_size() const noexcept { return b_end - b_begin; }
};

/// Well-separated pair decomposition. Every unordered pair of distinct
/// points lies in exactly one WsPair.
struct Wspd {
  std::vector<Index> order;  // point indices in fair-split-tree leaf order
  std::vector<WsPair> pairs;
  double separation = 0.0;

  std::span<const Index> a(const WsPair& p) const { return {order.data() + p.a_begin, p.a_size()}; }
  std::span<const Index> b(const WsPair& p) const { return {order.data() + p.b_begin, p.b_size()}; }
};

/// WSPD from a fair-split tree. Groups are tested through their bounding
/// boxes' circumscribed balls: with r the larger radius, the pair is
/// accepted when (centre distance - 2r) >= s * r.
Wspd wspd(const PointSet& points, double s);

/// Same, restricted to the points at `subset`; the result refers to the
/// original indices.
Wspd wspd(const PointSet& points, std::span<const Index> subset, double s);

/// Separation that makes a one-edge-per-pair WSPD graph a t'-spanner.
double ft_separation(double t_prime);

/// k'-fault-tolerant t'-spanner edges over the points at `subset` (original
/// indices, u < v, sorted). For each pair with m = k'+1: if both sides have
/// at least m points, m disjoint index-ordered pairs a_i b_i; otherwise
/// every point of a smaller side is joined to min(m, |other|) points of the
/// other side. At most m^2 edges per pair.
std::vector<std::pair<Index, Index>> ft_spanner_edges(const PointSet& points, std::span<const Index> subset,
                                                      std::size_t k_prime, double t_prime);

GeomGraph ft_spanner(PointsPtr points, std::size_t k_prime, double t_prime);

}  // namespace robspan
