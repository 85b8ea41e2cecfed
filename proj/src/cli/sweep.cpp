#include <algorithm>
#include <map>
#include <sstream>

#include "internal.hpp"
#include "robspan/adversary.hpp"
#include "robspan/error.hpp"
#include "robspan/graph_io.hpp"
#include "robspan/grid.hpp"
#include "robspan/kernels.hpp"
#include "robspan/line_spanners.hpp"
#include "robspan/robustness.hpp"

namespace robspan::cli {

namespace {

struct Instance {
  std::size_t n = 0;
  GeomGraph graph;
  std::optional<RobustDd> dd;
  std::size_t side = 0;
};

struct Cell {
  std::size_t n_index = 0, k = 0, trial = 0;
  std::uint64_t seed = 0;
  std::size_t splus = 0;
  double bound = 0.0;
  bool verified = false, success = false;
  std::size_t trials = 0;
  std::optional<std::size_t> oracle;
  bool oracle_exact = false;
  std::string status = "ok";
};

Instance make_instance(const SweepConfig& config, std::size_t n) {
  Instance inst;
  inst.n = n;
  const std::string& c = config.construction;
  if (c == "g2x") {
    inst.graph = build_g2x(share(PointSet::integer_line(n)));
  } else if (c == "gf") {
    inst.graph = build_gf(share(PointSet::integer_line(n)), config.build.f.make());
  } else if (c == "grid") {
    inst.side = exact_sqrt(n);
    if (inst.side == 0) throw UsageError("grid sweeps need perfect-square n, got " + std::to_string(n));
    inst.graph = build_grid(inst.side);
  } else if (c == "robust-dd") {
    BuildFlags flags = config.build;
    flags.n = n;
    flags.seed = derive_seed(config.build.seed, n, 0, 0);
    Built built = build_construction(c, flags);
    inst.graph = std::move(built.graph);
    inst.dd = std::move(built.dd);
  } else {
    throw UsageError("sweep does not support '" + c + "'");
  }
  return inst;
}

void run_cell(const SweepConfig& config, const IteratedFunction* f, const Instance& inst, Cell& cell) {
  const std::size_t n = inst.n;
  if (cell.k > n) throw InputError("k exceeds n");
  const VertexSet failed = attack_random(n, cell.k, cell.seed);
  const std::uint64_t builder_seed = derive_seed(cell.seed, 1, 0, 0);
  RobustnessCertificate cert;
  const std::string& c = config.construction;
  if (c == "g2x" || c == "gf") {
    SplusOptions options;
    options.seed = builder_seed;
    options.max_retries = config.retries;
    SplusOutcome r = c == "g2x" ? splus_g2x(inst.graph, failed, options) : splus_gf(inst.graph, *f, failed, options);
    cert = std::move(r.certificate);
    cell.bound = r.bound;
    cell.success = r.success;
    cell.trials = r.trials;
  } else if (c == "grid") {
    GridSplusOptions options;
    options.seed = builder_seed;
    options.max_retries = std::min<std::size_t>(config.retries, 16);
    GridSplusOutcome r = splus_grid(inst.graph, inst.side, failed, options);
    cert = std::move(r.certificate);
    cell.bound = r.bound;
    cell.success = r.success;
    cell.trials = r.trials;
  } else {
    cert = splus_dd(*inst.dd, failed);
    cell.bound = dd_casualty_bound(*inst.dd, cell.k);
    cell.success = cert.verified;
    cell.trials = 1;
  }
  cell.splus = cert.casualties.size();
  cell.verified = cert.verified;
  if (!cell.success) cell.status = "retries exhausted";
  if (n <= config.oracle_max_n) {
    const auto oracle = minimal_splus(inst.graph, failed, cert.t, cert.mode, config.exact_cap);
    cell.oracle = oracle.casualties.size();
    cell.oracle_exact = oracle.minimal;
  }
}

double ratio(const Cell& c) { return c.bound > 0.0 ? static_cast<double>(c.splus) / c.bound : 0.0; }

}  // namespace

std::string run_sweep(const SweepConfig& config) {
  if (config.n.empty() || config.k.empty()) throw UsageError("sweep needs non-empty --n and --k lists");
  if (config.trials == 0) throw UsageError("--trials must be at least 1");
  std::optional<IteratedFunction> f;
  if (config.construction == "gf") f = config.build.f.make();

  std::vector<Instance> instances;
  for (std::size_t n : config.n) instances.push_back(make_instance(config, n));

  std::vector<Cell> cells;
  for (std::size_t ni = 0; ni < config.n.size(); ++ni) {
    for (std::size_t k : config.k) {
      for (std::size_t trial = 0; trial < config.trials; ++trial) {
        Cell cell;
        cell.n_index = ni;
        cell.k = k;
        cell.trial = trial;
        cell.seed = derive_seed(config.build.seed, config.n[ni], k, trial);
        cells.push_back(cell);
      }
    }
  }

  const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    Cell& cell = cells[static_cast<std::size_t>(i)];
    try {
      run_cell(config, f ? &*f : nullptr, instances[cell.n_index], cell);
    } catch (const std::exception& e) {
      cell.status = std::string("error: ") + e.what();
    }
  }

  std::ostringstream out;
  out << "construction,n,k,trial,seed,edges,splus,bound,ratio,verified,success,trials,splus_oracle,oracle_exact,"
         "status\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const Cell& c : cells) {
    const Instance& inst = instances[c.n_index];
    std::string status = c.status;
    std::replace(status.begin(), status.end(), ',', ';');
    out << config.construction << ',' << inst.n << ',' << c.k << ',' << c.trial << ',' << c.seed << ','
        << inst.graph.edge_count() << ',' << c.splus << ',' << format_real(c.bound) << ',' << format_real(ratio(c))
        << ',' << flag(c.verified) << ',' << flag(c.success) << ',' << c.trials << ','
        << (c.oracle ? std::to_string(*c.oracle) : "") << ',' << flag(c.oracle_exact) << ',' << status << '\n';
  }

  out << "\nconstruction,n,k,rows,max_ratio,mean_ratio,all_verified,all_within_bound\n";
  for (std::size_t ni = 0; ni < config.n.size(); ++ni) {
    for (std::size_t k : config.k) {
      std::size_t rows = 0;
      double max_r = 0.0, sum_r = 0.0;
      bool verified = true, within = true;
      for (const Cell& c : cells) {
        if (c.n_index != ni || c.k != k) continue;
        ++rows;
        max_r = std::max(max_r, ratio(c));
        sum_r += ratio(c);
        verified = verified && c.verified && c.status == "ok";
        within = within && static_cast<double>(c.splus) <= c.bound;
      }
      out << config.construction << ',' << config.n[ni] << ',' << k << ',' << rows << ',' << format_real(max_r)
          << ',' << format_real(sum_r / static_cast<double>(rows)) << ',' << flag(verified) << ',' << flag(within)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace robspan::cli
