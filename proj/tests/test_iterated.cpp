#include <doctest.h>

#include <cmath>

#include "robspan/error.hpp"
#include "robspan/iterated.hpp"

using namespace robspan;

TEST_CASE("next_pow2") {
  CHECK(next_pow2(1) == 1);
  CHECK(next_pow2(2) == 2);
  CHECK(next_pow2(3) == 4);
  CHECK(next_pow2(4.5) == 8);
  CHECK(next_pow2(1024) == 1024);
  CHECK_THROWS_AS(next_pow2(0.5), InputError);
}

TEST_CASE("iterates and iterated inverse") {
  const IteratedFunction twok = make_preset("twok");
  CHECK(twok.k0() == 1);
  CHECK(twok.iterate(10) == 1024);
  CHECK(twok.f_star(1024) == 10);
  CHECK(twok.f_star(1023) == 9);
  CHECK(twok.f_star(1) == 0);
  CHECK_THROWS_AS(twok.f_star(0.5), InputError);

  const IteratedFunction sq = make_preset("kpow", 1.0);
  CHECK(sq.k0() == 2);
  CHECK(sq.iterate(1) == 4);
  CHECK(sq.iterate(2) == 16);
  CHECK(sq.iterate(3) == 256);
  CHECK(sq.f_star(64) == 2);
  CHECK(sq.f_star(256) == 3);
  CHECK(sq.f_star(4096) == 3);
  CHECK(sq.f_star(65536) == 4);

  // f* against a direct count on every preset.
  for (const auto& f : standard_presets(0.5)) {
    for (double n : {f.k0(), 10.0, 100.0, 5000.0, 1e6}) {
      if (n < f.k0()) continue;
      std::size_t count = 0;
      double x = f.k0();
      while (f(x) <= n) {
        x = f(x);
        ++count;
      }
      CHECK(f.f_star(n) == count);
    }
  }
}

TEST_CASE("validation rejects slow or non-convex functions") {
  CHECK_THROWS_AS(IteratedFunction("succ", [](double k) { return k + 1; }, 1), InputError);
  CHECK_THROWS_AS(IteratedFunction("sqrt", [](double k) { return 3 * std::sqrt(k); }, 1), InputError);
  CHECK_NOTHROW(IteratedFunction("square", [](double k) { return k * k; }, 2));
  CHECK_THROWS_AS(IteratedFunction("square", [](double k) { return k * k; }, 1), InputError);
  CHECK_THROWS_AS(make_preset("nope"), InputError);
  CHECK_THROWS_AS(make_preset("kpow", -1), InputError);
}

TEST_CASE("preset k0 is the smallest valid start") {
  for (const std::string& name : preset_names()) {
    const IteratedFunction f = make_preset(name, 1.0);
    if (f.k0() > 1) CHECK_THROWS(make_preset(name, 1.0, f.k0() - 1));
  }
}

TEST_CASE("span ladder") {
  const IteratedFunction sq = make_preset("kpow", 1.0);
  CHECK(span_ladder(sq, 20) == std::vector<std::uint64_t>{1, 2, 4, 16});
  CHECK(span_ladder(make_preset("twok"), 8) == std::vector<std::uint64_t>{1, 2, 4, 8});
}
