#include "robspan/iterated.hpp"

#include <algorithm>
#include <cmath>

#include "robspan/error.hpp"

namespace robspan {

std::uint64_t next_pow2(double x) {
  if (!(x >= 1.0)) throw InputError("next_pow2: argument must be at least 1");
  if (x > 0x1p62) throw InputError("next_pow2: argument too large");
  std::uint64_t p = 1;
  while (static_cast<double>(p) < x) p <<= 1;
  return p;
}

namespace {

constexpr std::size_t kMaxIterates = 100000;
// Relative slack for the f(x)/x monotonicity spot check.
constexpr double kRatioSlack = 1e-12;

}  // namespace

IteratedFunction::IteratedFunction(std::string name, std::function<double(double)> f, double k0, double n_max)
    : name_(std::move(name)), f_(std::move(f)), k0_(k0), n_max_(n_max) {
  if (!f_) throw InputError("IteratedFunction: empty function");
  if (!(k0_ >= 1.0)) throw InputError("IteratedFunction '" + name_ + "': k0 must be at least 1");
  if (!(f_(k0_ + 1.0) - f_(k0_) > 1.0)) {
    throw InputError("IteratedFunction '" + name_ + "': requires f(k0+1) - f(k0) > 1");
  }
  iterates_.push_back(k0_);
  while (iterates_.back() <= n_max_) {
    const double prev = iterates_.back();
    const double next = f_(prev);
    if (!std::isfinite(next) || !(next > prev)) {
      throw InputError("IteratedFunction '" + name_ + "': iterates must strictly increase");
    }
    iterates_.push_back(next);
    if (iterates_.size() > kMaxIterates) throw InputError("IteratedFunction '" + name_ + "': too many iterates");
  }
  for (double x : iterates_) {
    if (x > n_max_) break;
    const double ratio = f_(x) / x;
    for (double delta : {0.5, 1.0, x}) {
      const double y = x + delta;
      if (f_(y) / y < ratio * (1.0 - kRatioSlack)) {
        throw InputError("IteratedFunction '" + name_ + "': f(x)/x decreases near x=" + std::to_string(x));
      }
    }
    // Midpoint convexity on [x, 2x].
    if (f_(1.5 * x) > 0.5 * (f_(x) + f_(2.0 * x)) * (1.0 + kRatioSlack)) {
      throw InputError("IteratedFunction '" + name_ + "': f is not convex near x=" + std::to_string(x));
    }
  }
}

double IteratedFunction::iterate(std::size_t i) const {
  if (i >= iterates_.size()) throw InputError("IteratedFunction: iterate index beyond table");
  return iterates_[i];
}

std::size_t IteratedFunction::f_star(double n) const {
  if (n < k0_) throw InputError("f_star: n must be at least k0");
  if (n > n_max_) throw InputError("f_star: n exceeds the tabulated range");
  auto it = std::upper_bound(iterates_.begin(), iterates_.end(), n);
  return static_cast<std::size_t>(it - iterates_.begin()) - 1;
}

std::vector<std::uint64_t> span_ladder(const IteratedFunction& f, std::size_t n) {
  std::vector<std::uint64_t> spans{1};
  if (static_cast<double>(n) >= f.k0()) {
    const std::size_t top = f.f_star(static_cast<double>(n));
    for (std::size_t j = 0; j <= top; ++j) spans.push_back(next_pow2(f.iterate(j)));
  }
  std::sort(spans.begin(), spans.end());
  spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
  return spans;
}

namespace {

std::function<double(double)> preset_function(std::string_view name, double epsilon) {
  if (name == "twok") return [](double k) { return 2.0 * k; };
  if (name == "klogk") return [](double k) { return k * std::max(1.0, std::log2(k)); };
  if (name == "ksqrtexp") {
    return [epsilon](double k) { return k * std::pow(1.0 + epsilon, std::sqrt(std::max(0.0, std::log2(k)))); };
  }
  if (name == "kpow") return [epsilon](double k) { return std::pow(k, 1.0 + epsilon); };
  throw InputError("unknown preset '" + std::string(name) + "' (expected twok|klogk|ksqrtexp|kpow)");
}

}  // namespace

IteratedFunction make_preset(std::string_view name, double epsilon, std::optional<double> k0) {
  if (!(epsilon > 0.0)) throw InputError("preset: epsilon must be positive");
  auto f = preset_function(name, epsilon);
  if (k0) return IteratedFunction(std::string(name), f, *k0);
  for (double candidate = 1.0; candidate <= 1.0e6; candidate += 1.0) {
    try {
      return IteratedFunction(std::string(name), f, candidate);
    } catch (const InputError&) {
    }
  }
  throw InputError("preset '" + std::string(name) + "': no valid k0 found");
}

std::vector<IteratedFunction> standard_presets(double epsilon) {
  std::vector<IteratedFunction> out;
  for (const char* name : {"klogk", "ksqrtexp", "kpow"}) out.push_back(make_preset(name, epsilon));
  return out;
}

std::vector<std::string> preset_names() { return {"twok", "klogk", "ksqrtexp", "kpow"}; }

}  // namespace robspan
