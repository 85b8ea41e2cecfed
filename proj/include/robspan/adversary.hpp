#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "robspan/certificate.hpp"
#include "robspan/geometry.hpp"
#include "robspan/iterated.hpp"

namespace robspan {

// Ranks i, x, y below are 1-based positions in the sorted point order.

/// Edges xy with x < i - k/4 < i + k/4 < y and y - x <= 2ctk (by rank).
/// Requires ck + 1 <= i <= n - ck - 1.
std::vector<std::pair<Index, Index>> good_edges(const GeomGraph& g, std::size_t i, std::size_t k, double c, double t);

struct IntervalAttack {
  VertexSet failed;  // 0-based indices
  std::size_t good_edge_count = 0;
  bool refused = false;  // the window plus left endpoints exceed k
  std::string reason;
};

/// The window {i - k/4, ..., i + k/4} plus the left endpoint of each good
/// edge. k must be divisible by 4. When that set has more than k vertices
/// the attack is refused instead.
IntervalAttack attack_interval_endpoints(const GeomGraph& g, std::size_t i, std::size_t k, double c, double t);

/// True when no edge xy of g \ failed with x < i < y has y - x <= bound.
bool cut_holds(const GeomGraph& g, const VertexSet& failed, std::size_t i, double bound);

/// Uniform k-subset of {0..n-1}, fixed per seed.
VertexSet attack_random(std::size_t n, std::size_t k, std::uint64_t seed);

/// The k consecutive ranks starting at i - floor(k/2), clamped into range.
VertexSet attack_interval(std::size_t n, std::size_t i, std::size_t k);

enum class AttackKind { interval_endpoints, random, interval };
std::string_view to_string(AttackKind kind);
AttackKind parse_attack_kind(std::string_view text);

struct AttackSpec {
  AttackKind kind = AttackKind::random;
  std::size_t k = 1;
  std::size_t i = 1;
  double t = 1.0;
  double c = 1.0;
  std::uint64_t seed = 0;
};

/// Classes [f^i(k0)/2, 2t f^i(k0)] for i = 1..f*(n/t), and the first index
/// i0 from which consecutive classes no longer overlap.
struct LowerBoundClasses {
  std::vector<std::size_t> index;
  std::vector<double> lo, hi;
  std::optional<std::size_t> i0;
};
LowerBoundClasses lower_bound_classes(const IteratedFunction& f, double t, std::size_t n);

struct CensusRow {
  std::size_t index = 0;
  double lo = 0.0, hi = 0.0;
  std::size_t edges = 0;
  bool flagged = false;  // below the threshold
};

/// Edge counts per lower-bound class; classes with fewer than `threshold`
/// edges are flagged.
std::vector<CensusRow> census(const GeomGraph& g, const IteratedFunction& f, double t, double threshold);
std::string census_csv(const std::vector<CensusRow>& rows);

/// Constructive casualty builder: (S, seed) -> certificate, success.
using SplusBuilder = std::function<std::pair<RobustnessCertificate, bool>(const VertexSet&, std::uint64_t)>;

struct ProbeRow {
  AttackSpec spec;
  std::string status;  // ok, refused, error: ...
  std::size_t s_size = 0;
  std::optional<std::size_t> splus_constructive;
  bool constructive_verified = false;
  std::optional<std::size_t> splus_oracle;
  bool oracle_exact = false;
  bool oracle_verified = false;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  std::vector<CensusRow> census;

  /// kind,k,seed,status,s_size,splus_constructive,splus_oracle,oracle_exact,verified
  /// then a blank line and the census table.
  std::string to_csv() const;
};

/// Runs each attack, the constructive builder (if any) and the oracle;
/// per-attack failures are recorded, not thrown.
ProbeReport probe(const GeomGraph& g, double t, const std::vector<AttackSpec>& attacks,
                  const SplusBuilder& builder, std::size_t exact_cap, const IteratedFunction& f,
                  double census_threshold);

}  // namespace robspan
