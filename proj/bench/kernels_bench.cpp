// Serial reference vs OpenMP path for the shortest-path kernels.

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

#include "robspan/kernels.hpp"
#include "robspan/line_spanners.hpp"
#include "robspan/wspd.hpp"

using namespace robspan;

namespace {

const GeomGraph& line_graph(std::size_t n) {
  static std::map<std::size_t, GeomGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_g2x(share(PointSet::integer_line(n)))).first;
  return it->second;
}

const GeomGraph& plane_graph(std::size_t n) {
  static std::map<std::size_t, GeomGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0, 1);
    std::vector<double> coords(2 * n);
    for (double& c : coords) c = unit(rng);
    it = cache.emplace(n, ft_spanner(share(PointSet(2, coords)), 1, 2.0)).first;
  }
  return it->second;
}

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_MaxStretchLine(benchmark::State& state) {
  const GeomGraph& g = line_graph(static_cast<std::size_t>(state.range(0)));
  const VertexSet all = g.vertices();
  const std::vector<Index> sources(all.begin(), all.end());
  for (auto _ : state) benchmark::DoNotOptimize(max_stretch(g, sources, all, mode(state)));
}

void BM_MaxStretchPlane(benchmark::State& state) {
  const GeomGraph& g = plane_graph(static_cast<std::size_t>(state.range(0)));
  const VertexSet all = g.vertices();
  const std::vector<Index> sources(all.begin(), all.end());
  for (auto _ : state) benchmark::DoNotOptimize(max_stretch(g, sources, all, mode(state)));
}

void BM_ViolatingPairs(benchmark::State& state) {
  const GeomGraph& g = plane_graph(static_cast<std::size_t>(state.range(0)));
  const VertexSet all = g.vertices();
  for (auto _ : state) benchmark::DoNotOptimize(violating_pairs(g, all, 1.5, mode(state)));
}

}  // namespace

BENCHMARK(BM_MaxStretchLine)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxStretchPlane)->ArgsProduct({{128, 512}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ViolatingPairs)->ArgsProduct({{128, 512}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
