#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robspan/geometry.hpp"
#include "robspan/iterated.hpp"
#include "robspan/robust_dd.hpp"

namespace robspan::cli {

// Raised for bad flag combinations; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionFlags {
  std::string preset = "kpow";
  double epsilon = 1.0;
  std::optional<double> k0;

  IteratedFunction make() const;
};

struct BuildFlags {
  std::size_t n = 0;
  std::size_t side = 0;
  std::size_t dim = 2;
  double t = 4.0;
  std::size_t k_prime = 1;
  std::uint64_t seed = 0;
  FunctionFlags f;
};

using Report = std::vector<std::pair<std::string, std::string>>;

struct Built {
  GeomGraph graph;
  Report report;
  std::string tables;  // extra CSV appended to the sidecar
  std::optional<RobustDd> dd;
};

std::vector<std::string> construction_names();
Built build_construction(const std::string& name, const BuildFlags& flags);

/// n points uniform in the unit cube (or 1..n when dim = 1).
PointsPtr random_points(std::size_t n, std::size_t dim, std::uint64_t seed);

/// Seed for one sweep cell; independent of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c);

std::size_t exact_sqrt(std::size_t n);

/// Writes to path (binary) or to `fallback` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& fallback);

struct SweepConfig {
  std::string construction;
  BuildFlags build;
  std::vector<std::size_t> n;
  std::vector<std::size_t> k;
  std::size_t trials = 1;
  std::size_t retries = 64;
  std::size_t oracle_max_n = 32;
  std::size_t exact_cap = 32;
};

std::string run_sweep(const SweepConfig& config);

}  // namespace robspan::cli
