#include <doctest.h>

#include "robspan/adversary.hpp"
#include "robspan/error.hpp"
#include "robspan/grid.hpp"
#include "robspan/line_spanners.hpp"
#include "robspan/shortest_paths.hpp"
#include "robspan/robustness.hpp"
#include "support.hpp"

using namespace robspan;

TEST_CASE("grid graphs") {
  CHECK(build_grid(1).vertex_count() == 1);
  CHECK(build_grid(1).edge_count() == 0);
  CHECK(build_grid(3).edge_count() == 12);
  const GeomGraph g4 = build_grid(4);
  CHECK(g4.edge_count() == 24);
  for (Index v = 1; v < 16; ++v) CHECK(std::isfinite(shortest_path_lengths(g4, 0)[v]));
  for (const Edge& e : g4.edges()) CHECK(e.length == 1.0);
  CHECK(g4.points().coord(6, 0) == 1);
  CHECK(g4.points().coord(6, 1) == 2);
  CHECK_THROWS_AS(build_grid(0), InputError);
}

TEST_CASE("grid casualty sets") {
  const GeomGraph g = build_grid(12);
  CHECK(splus_grid(g, 12, {}).certificate.casualties.empty());

  const GridSplusOutcome one = splus_grid(g, 12, VertexSet{5 * 12 + 6});
  CHECK(one.success);
  CHECK(one.certificate.verified);
  CHECK(one.certificate.mode == SpannerMode::induced);
  CHECK(one.certificate.casualties.size() <= 16);

  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t k = 1 + trial % 6;
    const VertexSet s = testing_support::random_subset(rng, 144, k);
    GridSplusOptions options;
    options.seed = trial;
    const GridSplusOutcome out = splus_grid(g, 12, s, options);
    CHECK(out.success);
    CHECK(out.trials <= 16);
    CHECK(out.certificate.casualties.includes(s));
    CHECK(static_cast<double>(out.certificate.casualties.size()) <= 64.0 * k * k);
    const auto og = testing_support::to_oracle(g);
    const auto dead = oracle::mask(144, testing_support::to_ints(out.certificate.casualties));
    CHECK(oracle::robust_ok(og, dead, dead, 3.0, true));
  }
  CHECK_THROWS_AS(splus_grid(g, 11, VertexSet{1}), InputError);
}

TEST_CASE("good edges") {
  const GeomGraph path = testing_support::path_graph(100);
  CHECK(good_edges(path, 50, 4, 1, 2).empty());

  const GeomGraph g2x = build_g2x(share(PointSet::integer_line(64)));
  const auto good = good_edges(g2x, 32, 4, 1, 1);
  CHECK_FALSE(good.empty());
  for (auto [u, v] : good) {
    const double x = u + 1.0, y = v + 1.0;
    CHECK(x < 31);
    CHECK(y > 33);
    CHECK(y - x <= 8);
  }
  // every qualifying edge is reported
  std::size_t expect = 0;
  for (const Edge& e : g2x.edges()) {
    const double x = e.u + 1.0, y = e.v + 1.0;
    expect += (x < 31 && y > 33 && y - x <= 8) ? 1 : 0;
  }
  CHECK(good.size() == expect);

  const GeomGraph bare(share(PointSet::integer_line(64)), {});
  CHECK(good_edges(bare, 32, 4, 1, 1).empty());
  CHECK_THROWS_AS(good_edges(path, 3, 4, 1, 1), InputError);
  CHECK_THROWS_AS(good_edges(path, 97, 4, 1, 1), InputError);
}

TEST_CASE("interval endpoint attack") {
  const GeomGraph path = testing_support::path_graph(100);
  const IntervalAttack a = attack_interval_endpoints(path, 50, 4, 1, 2);
  CHECK_FALSE(a.refused);
  CHECK(a.failed == VertexSet{48, 49, 50});
  CHECK(cut_holds(path, a.failed, 50, 16));
  const auto oracle = minimal_splus(path, a.failed, 1.0);
  CHECK(oracle.casualties.size() >= 1 + 48);

  const GeomGraph g2x = build_g2x(share(PointSet::integer_line(64)));
  const IntervalAttack r = attack_interval_endpoints(g2x, 32, 4, 1, 1);
  CHECK(r.refused);
  CHECK(r.good_edge_count == 6);

  CHECK_THROWS_AS(attack_interval_endpoints(path, 50, 6, 1, 1), InputError);
  CHECK_FALSE(cut_holds(build_g2x(share(PointSet::integer_line(100))), VertexSet{}, 50, 16));
}

TEST_CASE("cut property holds after every accepted attack") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 60;
    const GeomGraph g = testing_support::from_oracle(testing_support::random_graph(rng, n, 1, 0.04));
    const std::size_t k = 4 * (1 + trial % 3);
    const std::size_t i = k + 1 + rng() % (n - 2 * k - 2);
    const IntervalAttack a = attack_interval_endpoints(g, i, k, 1, 1);
    if (!a.refused) {
      CHECK(a.failed.size() <= k);
    }
    CHECK(cut_holds(g, a.failed, i, 2.0 * static_cast<double>(k)));
  }
}

TEST_CASE("random and interval attacks") {
  CHECK(attack_random(10, 0, 1).empty());
  CHECK(attack_random(10, 10, 1) == VertexSet::all(10));
  CHECK(attack_random(100, 7, 5) == attack_random(100, 7, 5));
  CHECK(attack_random(100, 7, 5).size() == 7);
  CHECK_THROWS_AS(attack_random(3, 4, 0), InputError);
  CHECK(attack_interval(10, 5, 3) == VertexSet{3, 4, 5});
  CHECK(attack_interval(10, 1, 3) == VertexSet{0, 1, 2});
  CHECK(attack_interval(10, 10, 3) == VertexSet{7, 8, 9});
  CHECK(parse_attack_kind("interval") == AttackKind::interval);
  CHECK_THROWS_AS(parse_attack_kind("x"), InputError);
}

TEST_CASE("lower bound classes") {
  const LowerBoundClasses twok = lower_bound_classes(make_preset("twok"), 1.0, 1024);
  CHECK(twok.index.size() == 10);
  CHECK(twok.lo.front() == 1);
  CHECK(twok.hi.front() == 4);

  const IteratedFunction sq = make_preset("kpow", 1.0);
  const LowerBoundClasses c = lower_bound_classes(sq, 2.0, 1 << 20);
  REQUIRE(c.i0.has_value());
  for (std::size_t j = *c.i0; j < c.index.size(); ++j) CHECK(c.lo[j] > c.hi[j - 1]);
  CHECK(lower_bound_classes(sq, 1.0, 1).index.empty());
}

TEST_CASE("census") {
  const GeomGraph g2x = build_g2x(share(PointSet::integer_line(1024)));
  const IteratedFunction twok = make_preset("twok");
  for (const CensusRow& row : census(g2x, twok, 1.0, 256)) {
    if (row.index + 1 <= 10) CHECK(row.edges >= 256);
  }
  const auto path = census(testing_support::path_graph(1024), twok, 1.0, 256);
  CHECK(path.front().edges == 1023);
  for (std::size_t j = 1; j < path.size(); ++j) {
    CHECK(path[j].edges == 0);
    CHECK(path[j].flagged);
  }
  const GeomGraph bare(share(PointSet::integer_line(64)), {});
  for (const CensusRow& row : census(bare, twok, 1.0, 1)) CHECK(row.edges == 0);
  CHECK(census_csv(census(bare, twok, 1.0, 1)).rfind("class,lo,hi,edges,flagged\n", 0) == 0);
}

TEST_CASE("probe") {
  const GeomGraph path = testing_support::path_graph(12);
  const IteratedFunction twok = make_preset("twok");
  std::vector<AttackSpec> attacks;
  for (std::size_t i = 1; i <= 12; ++i) attacks.push_back({AttackKind::interval, 1, i, 1.0, 1.0, 0});
  const ProbeReport r = probe(path, 1.0, attacks, {}, 32, twok, 3);
  REQUIRE(r.rows.size() == 12);
  for (std::size_t i = 1; i <= 12; ++i) {
    CHECK(r.rows[i - 1].splus_oracle == 1 + std::min(i - 1, 12 - i));
    CHECK(r.rows[i - 1].oracle_exact);
  }

  const GeomGraph g2x = build_g2x(share(PointSet::integer_line(256)));
  const SplusBuilder builder = [&](const VertexSet& s, std::uint64_t seed) {
    SplusOptions options;
    options.seed = seed;
    const SplusOutcome out = splus_g2x(g2x, s, options);
    return std::make_pair(out.certificate, out.success);
  };
  std::vector<AttackSpec> random;
  for (std::uint64_t seed = 0; seed < 6; ++seed) random.push_back({AttackKind::random, 4, 1, 1.0, 1.0, seed});
  random.push_back({AttackKind::interval_endpoints, 4, 128, 1.0, 1.0, 0});
  random.push_back({AttackKind::random, 1000, 1, 1.0, 1.0, 0});
  const ProbeReport g = probe(g2x, 1.0, random, builder, 32, twok, 64);
  for (std::size_t j = 0; j < 6; ++j) {
    const ProbeRow& row = g.rows[j];
    CHECK(row.status == "ok");
    CHECK(row.constructive_verified);
    CHECK(*row.splus_constructive <= g2x_casualty_bound(4));
    if (row.oracle_exact) CHECK(*row.splus_oracle <= *row.splus_constructive);
  }
  CHECK(g.rows[6].status.rfind("refused", 0) == 0);
  CHECK(g.rows[7].status.rfind("error", 0) == 0);

  const ProbeReport census_only = probe(g2x, 1.0, {}, {}, 32, twok, 64);
  CHECK(census_only.rows.empty());
  CHECK_FALSE(census_only.census.empty());
  CHECK(census_only.to_csv().rfind("kind,k,seed,status,s_size,splus_constructive,splus_oracle,oracle_exact,verified\n\n", 0) == 0);
}
