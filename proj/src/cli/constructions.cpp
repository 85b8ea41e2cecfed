#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "internal.hpp"
#include "robspan/error.hpp"
#include "robspan/graph_io.hpp"
#include "robspan/grid.hpp"
#include "robspan/hardy.hpp"
#include "robspan/kernels.hpp"
#include "robspan/line_spanners.hpp"
#include "robspan/wspd.hpp"

namespace robspan::cli {

IteratedFunction FunctionFlags::make() const { return make_preset(preset, epsilon, k0); }

std::vector<std::string> construction_names() { return {"g2x", "gf", "grid", "robust-dd", "hardy", "ft"}; }

PointsPtr random_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw UsageError("--dim must be at least 1");
  if (dim == 1) return share(PointSet::integer_line(n));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = unit(rng);
  return share(PointSet(dim, std::move(coords)));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(seed);
  for (std::uint64_t v : {a, b, c}) h = mix(h ^ v);
  return h;
}

std::size_t exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

namespace {

void require_n(const BuildFlags& flags, const std::string& name) {
  if (flags.n == 0) throw UsageError(name + " needs --n >= 1");
}

void describe_function(Report& report, const IteratedFunction& f, const FunctionFlags& flags) {
  report.emplace_back("preset", flags.preset);
  report.emplace_back("epsilon", format_real(flags.epsilon));
  report.emplace_back("k0", format_real(f.k0()));
}

}  // namespace

Built build_construction(const std::string& name, const BuildFlags& flags) {
  Built out;
  Report& r = out.report;
  r.emplace_back("construction", name);
  if (name == "g2x") {
    require_n(flags, name);
    out.graph = build_g2x(share(PointSet::integer_line(flags.n)));
  } else if (name == "gf") {
    require_n(flags, name);
    const IteratedFunction f = flags.f.make();
    describe_function(r, f, flags.f);
    out.graph = build_gf(share(PointSet::integer_line(flags.n)), f);
    std::string spans;
    for (std::uint64_t s : span_ladder(f, flags.n)) spans += (spans.empty() ? "" : " ") + std::to_string(s);
    r.emplace_back("spans", spans);
  } else if (name == "grid") {
    if (flags.side == 0) throw UsageError("grid needs --side >= 1");
    out.graph = build_grid(flags.side);
    r.emplace_back("side", std::to_string(flags.side));
  } else if (name == "robust-dd") {
    require_n(flags, name);
    const IteratedFunction f = flags.f.make();
    describe_function(r, f, flags.f);
    RobustDdOptions options;
    options.t = flags.t;
    options.seed = flags.seed;
    RobustDd dd = build_robust_dd(random_points(flags.n, flags.dim, flags.seed), f, options);
    r.emplace_back("t", format_real(flags.t));
    r.emplace_back("seed", std::to_string(flags.seed));
    r.emplace_back("trees", std::to_string(dd.cover.trees.size()));
    r.emplace_back("tau", format_real(dd.report.tau));
    r.emplace_back("t_prime", format_real(dd.report.t_prime));
    r.emplace_back("stretch_bound", format_real(dd.report.stretch_bound));
    r.emplace_back("measured_stretch", format_real(dd.report.measured_stretch));
    r.emplace_back("f_star", std::to_string(dd.report.f_star));
    r.emplace_back("edge_constant", format_real(dd.report.edge_constant));
    out.tables = dd.report.to_csv();
    out.graph = dd.graph;
    out.dd = std::move(dd);
  } else if (name == "hardy") {
    require_n(flags, name);
    const IteratedFunction f = flags.f.make();
    describe_function(r, f, flags.f);
    const std::size_t s = std::max<std::size_t>(1, std::bit_width(flags.n - 1));
    InnerBuilder inner;
    if (flags.dim == 1) {
      inner = [&f](PointsPtr pts) { return build_gf(std::move(pts), f); };
    } else {
      inner = [&](PointsPtr pts) {
        RobustDdOptions options;
        options.t = flags.t;
        options.seed = flags.seed;
        return build_robust_dd(std::move(pts), f, options).graph;
      };
    }
    HardyOptions options;
    options.seed = flags.seed;
    Hardy h = build_hardy(random_points(flags.n, flags.dim, flags.seed), s, inner, options);
    r.emplace_back("seed", std::to_string(flags.seed));
    r.emplace_back("s", std::to_string(s));
    r.emplace_back("x_size", std::to_string(h.report.x_size));
    r.emplace_back("tree_edges", std::to_string(h.report.tree_edges));
    r.emplace_back("inner_edges", std::to_string(h.report.inner_edges));
    r.emplace_back("edges_per_point", format_real(h.report.edges_per_point));
    out.graph = h.graph;
  } else if (name == "ft") {
    require_n(flags, name);
    out.graph = ft_spanner(random_points(flags.n, flags.dim, flags.seed), flags.k_prime, flags.t);
    r.emplace_back("seed", std::to_string(flags.seed));
    r.emplace_back("k_prime", std::to_string(flags.k_prime));
    r.emplace_back("t_prime", format_real(flags.t));
  } else {
    throw UsageError("unknown construction '" + name + "'");
  }
  r.emplace(r.begin() + 1, "n", std::to_string(out.graph.index_count()));
  r.emplace(r.begin() + 2, "d", std::to_string(out.graph.points().dim()));
  r.emplace_back("edges", std::to_string(out.graph.edge_count()));
  r.emplace_back("max_degree", std::to_string(out.graph.max_degree()));
  return out;
}

}  // namespace robspan::cli
