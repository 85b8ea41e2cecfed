#include "robspan/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "robspan/error.hpp"
#include "robspan/graph_io.hpp"
#include "robspan/robustness.hpp"

namespace robspan {

namespace {

void require_line(const GeomGraph& g, const char* who) {
  if (g.points().dim() != 1) throw InputError(std::string(who) + ": needs a 1-D point set");
}

}  // namespace

std::vector<std::pair<Index, Index>> good_edges(const GeomGraph& g, std::size_t i, std::size_t k, double c,
                                                double t) {
  require_line(g, "good_edges");
  const double n = static_cast<double>(g.index_count());
  const double ck = c * static_cast<double>(k);
  const double rank = static_cast<double>(i);
  if (k == 0) throw InputError("good_edges: k must be positive");
  if (rank < ck + 1.0 || rank > n - ck - 1.0) {
    throw InputError("good_edges: need ck+1 <= i <= n-ck-1, got i=" + std::to_string(i));
  }
  const double lo = rank - static_cast<double>(k) / 4.0;
  const double hi = rank + static_cast<double>(k) / 4.0;
  const double limit = 2.0 * c * t * static_cast<double>(k);
  std::vector<std::pair<Index, Index>> out;
  for (const Edge& e : g.edges()) {
    const double x = e.u + 1.0, y = e.v + 1.0;
    if (x < lo && hi < y && y - x <= limit) out.emplace_back(e.u, e.v);
  }
  return out;
}

IntervalAttack attack_interval_endpoints(const GeomGraph& g, std::size_t i, std::size_t k, double c, double t) {
  if (k == 0 || k % 4 != 0) throw InputError("attack_interval_endpoints: k must be a positive multiple of 4");
  const auto good = good_edges(g, i, k, c, t);
  IntervalAttack out;
  out.good_edge_count = good.size();
  std::vector<Index> s;
  const std::size_t n = g.index_count();
  for (std::size_t r = i > k / 4 ? i - k / 4 : 1; r <= i + k / 4; ++r) {
    if (r >= 1 && r <= n) s.push_back(static_cast<Index>(r - 1));
  }
  for (const auto& e : good) s.push_back(e.first);
  out.failed = VertexSet(std::move(s));
  if (out.failed.size() > k) {
    out.refused = true;
    out.reason = std::to_string(good.size()) + " good edges; the attack needs " +
                 std::to_string(out.failed.size()) + " > k = " + std::to_string(k) + " vertices";
  }
  return out;
}

bool cut_holds(const GeomGraph& g, const VertexSet& failed, std::size_t i, double bound) {
  for (const Edge& e : g.edges()) {
    const std::size_t x = e.u + 1, y = e.v + 1;
    if (x < i && i < y && !failed.contains(e.u) && !failed.contains(e.v) && static_cast<double>(y - x) <= bound) {
      return false;
    }
  }
  return true;
}

VertexSet attack_random(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw InputError("attack_random: k exceeds n");
  std::vector<Index> all(n), picked;
  std::iota(all.begin(), all.end(), Index{0});
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), k, rng);
  return VertexSet(std::move(picked));
}

VertexSet attack_interval(std::size_t n, std::size_t i, std::size_t k) {
  if (k > n) throw InputError("attack_interval: k exceeds n");
  if (i < 1 || i > n) throw InputError("attack_interval: rank out of range");
  std::size_t first = i - 1 >= k / 2 ? i - 1 - k / 2 : 0;
  first = std::min(first, n - k);
  std::vector<Index> s(k);
  std::iota(s.begin(), s.end(), static_cast<Index>(first));
  return VertexSet(std::move(s));
}

std::string_view to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::interval_endpoints:
      return "interval_endpoints";
    case AttackKind::random:
      return "random";
    case AttackKind::interval:
      return "interval";
  }
  return "?";
}

AttackKind parse_attack_kind(std::string_view text) {
  for (AttackKind k : {AttackKind::interval_endpoints, AttackKind::random, AttackKind::interval}) {
    if (text == to_string(k)) return k;
  }
  throw InputError("unknown attack kind '" + std::string(text) + "'");
}

LowerBoundClasses lower_bound_classes(const IteratedFunction& f, double t, std::size_t n) {
  LowerBoundClasses out;
  const double scaled = static_cast<double>(n) / t;
  if (scaled < f.k0()) return out;
  const std::size_t m = f.f_star(scaled);
  for (std::size_t i = 1; i <= m; ++i) {
    out.index.push_back(i);
    out.lo.push_back(f.iterate(i) / 2.0);
    out.hi.push_back(2.0 * t * f.iterate(i));
  }
  if (m == 0) return out;
  std::size_t i0 = m;
  while (i0 > 1 && out.lo[i0 - 1] > out.hi[i0 - 2]) --i0;
  out.i0 = i0;
  return out;
}

std::vector<CensusRow> census(const GeomGraph& g, const IteratedFunction& f, double t, double threshold) {
  const LowerBoundClasses classes = lower_bound_classes(f, t, g.index_count());
  std::vector<LengthClass> ranges;
  for (std::size_t j = 0; j < classes.index.size(); ++j) ranges.push_back({classes.lo[j], classes.hi[j]});
  const auto counts = census_classes(g, ranges);
  std::vector<CensusRow> rows;
  for (std::size_t j = 0; j < ranges.size(); ++j) {
    rows.push_back({classes.index[j], ranges[j].lo, ranges[j].hi, counts[j],
                    static_cast<double>(counts[j]) < threshold});
  }
  return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "class,lo,hi,edges,flagged\n";
  for (const CensusRow& r : rows) {
    out << r.index << ',' << format_real(r.lo) << ',' << format_real(r.hi) << ',' << r.edges << ','
        << (r.flagged ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string ProbeReport::to_csv() const {
  std::ostringstream out;
  out << "kind,k,seed,status,s_size,splus_constructive,splus_oracle,oracle_exact,verified\n";
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const ProbeRow& r : rows) {
    const bool verified = (!r.splus_constructive || r.constructive_verified) && (!r.splus_oracle || r.oracle_verified);
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    out << to_string(r.spec.kind) << ',' << r.spec.k << ',' << r.spec.seed << ',' << status << ',' << r.s_size
        << ',' << opt(r.splus_constructive) << ',' << opt(r.splus_oracle) << ','
        << (r.oracle_exact ? "true" : "false") << ',' << (verified ? "true" : "false") << '\n';
  }
  out << '\n' << census_csv(census);
  return out.str();
}

ProbeReport probe(const GeomGraph& g, double t, const std::vector<AttackSpec>& attacks,
                  const SplusBuilder& builder, std::size_t exact_cap, const IteratedFunction& f,
                  double census_threshold) {
  ProbeReport report;
  for (const AttackSpec& spec : attacks) {
    ProbeRow row;
    row.spec = spec;
    row.status = "ok";
    try {
      VertexSet s;
      switch (spec.kind) {
        case AttackKind::interval_endpoints: {
          IntervalAttack a = attack_interval_endpoints(g, spec.i, spec.k, spec.c, spec.t);
          if (a.refused) {
            row.status = "refused: " + a.reason;
            row.s_size = a.failed.size();
            report.rows.push_back(std::move(row));
            continue;
          }
          s = std::move(a.failed);
          break;
        }
        case AttackKind::random:
          s = attack_random(g.index_count(), spec.k, spec.seed);
          break;
        case AttackKind::interval:
          s = attack_interval(g.index_count(), spec.i, spec.k);
          break;
      }
      row.s_size = s.size();
      if (builder) {
        auto [cert, success] = builder(s, spec.seed);
        row.splus_constructive = cert.casualties.size();
        row.constructive_verified = cert.verified;
        if (!success) row.status = "retries exhausted";
      }
      const RobustnessCertificate oracle = minimal_splus(g, s, t, SpannerMode::deletion, exact_cap);
      row.splus_oracle = oracle.casualties.size();
      row.oracle_exact = oracle.minimal;
      row.oracle_verified = oracle.verified;
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
    report.rows.push_back(std::move(row));
  }
  report.census = census(g, f, t, census_threshold);
  return report;
}

}  // namespace robspan
