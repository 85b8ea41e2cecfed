#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace robspan {

/// Smallest power of two >= x. Requires 1 <= x <= 2^62.
std::uint64_t next_pow2(double x);

/// An increasing convex f together with its starting value k0, with the
/// iterates f^0(k0) = k0, f^1(k0), ... tabulated up to the first value
/// above n_max.
///
/// The constructor checks f(k0+1) - f(k0) > 1, that the iterates strictly
/// increase, and that f(x)/x does not decrease at the tabulated points.
class IteratedFunction {
 public:
  static constexpr double kDefaultMax = 4.0e18;

  IteratedFunction(std::string name, std::function<double(double)> f, double k0, double n_max = kDefaultMax);

  const std::string& name() const noexcept { return name_; }
  double k0() const noexcept { return k0_; }
  double operator()(double x) const { return f_(x); }

  /// f^i(k0); throws if i is past the tabulated range.
  double iterate(std::size_t i) const;
  std::span<const double> iterates() const noexcept { return iterates_; }

  /// max{ i : f^i(k0) <= n }. Requires k0 <= n <= n_max.
  std::size_t f_star(double n) const;

 private:
  std::string name_;
  std::function<double(double)> f_;
  double k0_;
  double n_max_;
  std::vector<double> iterates_;
};

/// Spans ceil2(f^j(k0)) for j = 0..f*(n), plus span 1, deduplicated.
std::vector<std::uint64_t> span_ladder(const IteratedFunction& f, std::size_t n);

/// Named parameter families: "twok" (2k from 1), "klogk", "ksqrtexp",
/// "kpow". k0 defaults to the smallest integer passing the constructor's
/// checks.
IteratedFunction make_preset(std::string_view name, double epsilon = 1.0, std::optional<double> k0 = std::nullopt);

/// The three families with their default k0.
std::vector<IteratedFunction> standard_presets(double epsilon = 1.0);

std::vector<std::string> preset_names();

}  // namespace robspan
