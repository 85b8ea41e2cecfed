#include "robspan/line_spanners.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>

#include "robspan/error.hpp"

namespace robspan {
namespace {

void require_line(const PointSet& pts, const char* who) {
  if (pts.dim() != 1) throw InputError(std::string(who) + ": requires a 1-D point set");
}

GeomGraph build_from_spans(PointsPtr points, const std::vector<std::uint64_t>& spans) {
  const std::size_t n = points->size();
  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(span_edge_count(n, spans));
  for (std::uint64_t s : spans) {
    for (std::size_t i = 0; i + s < n; ++i) edges.emplace_back(static_cast<Index>(i), static_cast<Index>(i + s));
  }
  return GeomGraph(std::move(points), std::move(edges));
}

std::vector<std::uint64_t> g2x_spans(std::size_t n) {
  std::vector<std::uint64_t> spans;
  for (std::uint64_t s = 1; s < n; s <<= 1) spans.push_back(s);
  return spans;
}

// Kill the 1-based rank window [lo, hi], clipped to [1, n].
void kill_window(std::vector<Index>& killed, std::int64_t lo, std::int64_t hi, std::size_t n) {
  lo = std::max<std::int64_t>(lo, 1);
  hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(n));
  for (std::int64_t rank = lo; rank <= hi; ++rank) killed.push_back(static_cast<Index>(rank - 1));
}

struct TrialSetup {
  std::uint64_t offset_range;
  double bound;
  std::function<KillPlan(std::uint64_t)> kill;
  std::function<bool(const KillPlan&)> accept;
};

SplusOutcome run_trials(const GeomGraph& g, const VertexSet& failed, const SplusOptions& options,
                        const TrialSetup& setup) {
  SplusOutcome out;
  out.certificate.t = 1.0;
  out.certificate.mode = SpannerMode::deletion;
  out.certificate.failed = failed;
  out.bound = setup.bound;
  if (failed.empty()) {
    out.certificate.verified = true;
    out.success = true;
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, setup.offset_range - 1);

  std::optional<RobustnessCertificate> best;
  for (std::size_t trial = 0; trial < options.max_retries; ++trial) {
    const std::uint64_t r = pick(rng);
    ++out.trials;
    KillPlan plan = setup.kill(r);
    RobustnessCertificate cert = out.certificate;
    cert.casualties = failed.unite(plan.killed);
    const bool accepted = setup.accept(plan);
    if (!accepted && best && best->casualties.size() <= cert.casualties.size()) continue;
    const SpannerCheck check = verify_certificate(g, cert);
    cert.verified = check.ok;
    cert.sampled = check.sampled;
    if (accepted && cert.verified) {
      out.certificate = std::move(cert);
      out.success = true;
      out.shift = r;
      return out;
    }
    if (cert.verified && (!best || cert.casualties.size() < best->casualties.size())) best = std::move(cert);
  }
  if (best) {
    out.certificate = std::move(*best);
  } else {
    out.certificate.casualties = g.vertices();
    out.certificate.verified = true;
  }
  return out;
}

}  // namespace

std::size_t span_edge_count(std::size_t n, const std::vector<std::uint64_t>& spans) {
  std::size_t total = 0;
  for (std::uint64_t s : spans) {
    if (s < n) total += n - s;
  }
  return total;
}

GeomGraph build_g2x(PointsPtr points) {
  require_line(*points, "build_g2x");
  const std::size_t n = points->size();
  return build_from_spans(std::move(points), g2x_spans(n));
}

GeomGraph build_gf(PointsPtr points, const IteratedFunction& f) {
  require_line(*points, "build_gf");
  const std::size_t n = points->size();
  return build_from_spans(std::move(points), span_ladder(f, n));
}

KillPlan g2x_kill(std::size_t n, const VertexSet& failed, std::uint64_t r) {
  failed.check_range(n);
  const double k = static_cast<double>(failed.size());
  const int top = n <= 1 ? 0 : std::bit_width(n - 1);  // ceil(log2 n)
  KillPlan plan;
  std::vector<Index> killed;
  for (Index idx : failed) {
    const std::int64_t rank = static_cast<std::int64_t>(idx) + 1;
    const std::int64_t diff = rank - static_cast<std::int64_t>(r);
    // 2^j exactly divides i - r; i = r is divisible by everything.
    const int j = diff == 0 ? top : std::min(top, std::countr_zero(static_cast<std::uint64_t>(std::abs(diff))));
    const std::int64_t half = std::int64_t{1} << j;
    kill_window(killed, rank - half + 1, rank + half - 1, n);
    const double cost = static_cast<double>(2 * half - 1);
    if (cost >= 4.0 * k) plan.expensive = true;
    else plan.cheap_cost += cost;
  }
  plan.killed = VertexSet(std::move(killed));
  return plan;
}

KillPlan gf_kill(std::size_t n, const IteratedFunction& f, const VertexSet& failed, std::uint64_t r) {
  failed.check_range(n);
  const double k = static_cast<double>(failed.size());
  const std::size_t top = f.f_star(std::max(static_cast<double>(n), f.k0())) + 1;
  std::vector<std::uint64_t> blocks;
  for (std::size_t j = 0; j <= top; ++j) blocks.push_back(next_pow2(std::min(f.iterate(j), 0x1p62)));
  const double expensive_above = f(4.0 * k);

  KillPlan plan;
  std::vector<Index> killed;
  for (Index idx : failed) {
    const std::int64_t rank = static_cast<std::int64_t>(idx) + 1;
    const std::int64_t diff = rank - static_cast<std::int64_t>(r);
    std::size_t j = 0;
    while (j < blocks.size() && diff % static_cast<std::int64_t>(blocks[j]) == 0) ++j;
    double cost;
    if (j == blocks.size()) {
      // i = r sits on every block boundary: it takes everything down.
      kill_window(killed, 1, static_cast<std::int64_t>(n), n);
      cost = std::max(static_cast<double>(n), static_cast<double>(blocks.back()));
    } else {
      const auto block = static_cast<std::int64_t>(blocks[j]);
      const std::int64_t p = ((diff % block) + block) % block;
      const std::int64_t q = block - p;
      kill_window(killed, rank - p + 1, rank + q - 1, n);
      cost = static_cast<double>(block - 1);
    }
    if (cost > expensive_above) plan.expensive = true;
    else plan.cheap_cost += cost;
  }
  plan.killed = VertexSet(std::move(killed));
  return plan;
}

double g2x_casualty_bound(std::size_t k) {
  const double kk = static_cast<double>(k);
  if (k == 0) return 0.0;
  return kk + 4.0 * kk * std::log2(kk) + 12.0 * kk;
}

double gf_casualty_bound(const IteratedFunction& f, std::size_t k) {
  if (k == 0) return 0.0;
  const double four_k = 4.0 * static_cast<double>(k);
  return static_cast<double>(k) + f(four_k) * static_cast<double>(f.f_star(std::max(four_k, f.k0())) + 1);
}

SplusOutcome splus_g2x(const GeomGraph& g, const VertexSet& failed, const SplusOptions& options) {
  require_line(g.points(), "splus_g2x");
  const std::size_t n = g.index_count();
  failed.check_range(n);
  const std::size_t k = failed.size();
  const double k_real = static_cast<double>(k);
  const double cheap_limit = k == 0 ? 0.0 : 4.0 * k_real * std::log2(k_real) + 12.0 * k_real;
  TrialSetup setup{
      .offset_range = std::uint64_t{1} << (n <= 1 ? 0 : std::bit_width(n - 1)),
      .bound = g2x_casualty_bound(k),
      .kill = [&](std::uint64_t r) { return g2x_kill(n, failed, r); },
      .accept = [&](const KillPlan& plan) { return !plan.expensive && plan.cheap_cost <= cheap_limit; },
  };
  return run_trials(g, failed, options, setup);
}

SplusOutcome splus_gf(const GeomGraph& g, const IteratedFunction& f, const VertexSet& failed,
                      const SplusOptions& options) {
  require_line(g.points(), "splus_gf");
  const std::size_t n = g.index_count();
  failed.check_range(n);
  const std::size_t k = failed.size();
  double cheap_limit = 0.0;
  if (k > 0) {
    const double four_k = 4.0 * static_cast<double>(k);
    cheap_limit = f(four_k) * static_cast<double>(f.f_star(std::max(four_k, f.k0())) + 1);
  }
  const std::size_t top = f.f_star(std::max(static_cast<double>(n), f.k0())) + 1;
  TrialSetup setup{
      .offset_range = next_pow2(std::min(f.iterate(top), 0x1p62)),
      .bound = gf_casualty_bound(f, k),
      .kill = [&](std::uint64_t r) { return gf_kill(n, f, failed, r); },
      .accept = [&](const KillPlan& plan) { return !plan.expensive && plan.cheap_cost <= cheap_limit; },
  };
  return run_trials(g, failed, options, setup);
}

}  // namespace robspan
