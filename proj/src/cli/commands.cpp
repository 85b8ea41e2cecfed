#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

#include "internal.hpp"
#include "robspan/adversary.hpp"
#include "robspan/cli.hpp"
#include "robspan/error.hpp"
#include "robspan/graph_io.hpp"
#include "robspan/grid.hpp"
#include "robspan/line_spanners.hpp"
#include "robspan/robustness.hpp"

namespace robspan::cli {

namespace {

struct CertifyFlags {
  std::string graph, failed, casualties, builder = "oracle", out;
  std::string mode = "deletion";
  double t = 1.0;
  std::size_t exact_cap = kDefaultExactCap;
  std::size_t retries = 64;
  BuildFlags build;
};

void add_function_flags(CLI::App* cmd, FunctionFlags& f) {
  cmd->add_option("--preset", f.preset, "iterated function family")->check(CLI::IsMember(preset_names()));
  cmd->add_option("--epsilon", f.epsilon, "family parameter");
  cmd->add_option("--k0", f.k0, "starting value (default: smallest valid)");
}

std::string report_text(const Report& report, const std::string& tables) {
  std::string text;
  for (const auto& [k, v] : report) text += k + "=" + v + "\n";
  if (!tables.empty()) text += "\n" + tables;
  return text;
}

// Violations are printed as "violation: u v stretch".
int finish_certificate(const GeomGraph& g, const RobustnessCertificate& cert, bool exhausted, const std::string& out_path,
                       std::ostream& out, std::ostream& err) {
  const std::string text = to_text(cert);
  if (!out_path.empty()) emit(out_path, text, out);
  out << text;
  if (!cert.verified) {
    const SpannerCheck check = verify_certificate(g, cert);
    if (check.violation) {
      err << "violation: " << check.violation->u << ' ' << check.violation->v << ' '
          << format_real(check.violation->stretch) << '\n';
    } else {
      err << "verification failed\n";
    }
    return kUnverified;
  }
  if (exhausted) {
    err << "retries exhausted; certificate is the best verified attempt\n";
    return kExhausted;
  }
  return kOk;
}

bool same_edges(const GeomGraph& a, const GeomGraph& b) {
  if (a.edge_count() != b.edge_count() || a.index_count() != b.index_count()) return false;
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v) return false;
  }
  return true;
}

int cmd_certify(const CertifyFlags& flags, std::ostream& out, std::ostream& err) {
  const GeomGraph g = read_graph(flags.graph);
  const VertexSet failed = flags.failed.empty() ? VertexSet{} : read_vertex_set(flags.failed);
  failed.check_range(g.index_count());
  const std::string& b = flags.builder;
  if (b == "oracle") {
    const auto cert = minimal_splus(g, failed, flags.t, parse_mode(flags.mode), flags.exact_cap);
    return finish_certificate(g, cert, false, flags.out, out, err);
  }
  if (b == "given") {
    if (flags.casualties.empty()) throw UsageError("--builder given needs --casualties");
    RobustnessCertificate cert;
    cert.t = flags.t;
    cert.mode = parse_mode(flags.mode);
    cert.failed = failed;
    cert.casualties = read_vertex_set(flags.casualties);
    cert.casualties.check_range(g.index_count());
    if (!cert.casualties.includes(failed)) throw UsageError("S+ must contain S");
    const SpannerCheck check = verify_certificate(g, cert);
    cert.verified = check.ok;
    cert.sampled = check.sampled;
    return finish_certificate(g, cert, false, flags.out, out, err);
  }
  SplusOptions options;
  options.seed = flags.build.seed;
  options.max_retries = flags.retries;
  if (b == "g2x" || b == "gf") {
    SplusOutcome result = b == "g2x" ? splus_g2x(g, failed, options)
                                     : splus_gf(g, flags.build.f.make(), failed, options);
    err << "trials=" << result.trials << " bound=" << format_real(result.bound) << '\n';
    return finish_certificate(g, result.certificate, !result.success, flags.out, out, err);
  }
  if (b == "grid") {
    const std::size_t side = exact_sqrt(g.index_count());
    if (side == 0 || !same_edges(g, build_grid(side))) throw UsageError("graph is not a square grid");
    GridSplusOptions grid_options;
    grid_options.seed = flags.build.seed;
    grid_options.max_retries = flags.retries;
    GridSplusOutcome result = splus_grid(g, side, failed, grid_options);
    err << "trials=" << result.trials << " bound=" << format_real(result.bound) << '\n';
    return finish_certificate(g, result.certificate, !result.success, flags.out, out, err);
  }
  if (b == "robust-dd") {
    BuildFlags build = flags.build;
    build.n = g.index_count();
    build.dim = g.points().dim();
    const Built rebuilt = build_construction("robust-dd", build);
    if (!same_edges(g, rebuilt.graph)) {
      throw UsageError("graph does not match robust-dd rebuilt with these --seed/--preset/--t flags");
    }
    const auto cert = splus_dd(*rebuilt.dd, failed);
    err << "bound=" << format_real(dd_casualty_bound(*rebuilt.dd, failed.size())) << '\n';
    return finish_certificate(g, cert, false, flags.out, out, err);
  }
  throw UsageError("unknown builder '" + b + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust geometric spanners: builders, casualty certificates and attacks", "robspan"};
  app.require_subcommand(1);

  // build
  std::string construction, build_out;
  bool audit = false;
  BuildFlags build;
  auto* c_build = app.add_subcommand("build", "build a graph and write it with a .report sidecar");
  c_build->add_option("construction", construction, "g2x, gf, grid, robust-dd, hardy or ft")
      ->required()
      ->check(CLI::IsMember(construction_names()));
  c_build->add_option("--n", build.n, "number of points");
  c_build->add_option("--side", build.side, "grid side");
  c_build->add_option("--dim", build.dim, "dimension of random point sets");
  c_build->add_option("--t", build.t, "stretch target (robust-dd) or t' (ft)");
  c_build->add_option("--k-prime", build.k_prime, "fault tolerance of ft");
  c_build->add_option("--seed", build.seed);
  c_build->add_flag("--audit", audit, "measure the maximum stretch over all pairs");
  c_build->add_option("--out", build_out, "graph file; the report goes to <out>.report");
  add_function_flags(c_build, build.f);

  // certify
  CertifyFlags cert;
  auto* c_cert = app.add_subcommand("certify", "produce and verify a casualty set S+ for a failure set S");
  c_cert->add_option("--graph", cert.graph)->required()->check(CLI::ExistingFile);
  c_cert->add_option("--failed", cert.failed, "vertex-set file (omit for S = {})")->check(CLI::ExistingFile);
  c_cert->add_option("--builder", cert.builder, "oracle, given, g2x, gf, grid or robust-dd")
      ->check(CLI::IsMember({"oracle", "given", "g2x", "gf", "grid", "robust-dd"}));
  c_cert->add_option("--casualties", cert.casualties, "S+ file for --builder given")->check(CLI::ExistingFile);
  c_cert->add_option("--t", cert.t, "stretch for the oracle; construction t for robust-dd");
  c_cert->add_option("--mode", cert.mode)->check(CLI::IsMember({"deletion", "induced"}));
  c_cert->add_option("--exact-cap", cert.exact_cap);
  c_cert->add_option("--retries", cert.retries);
  c_cert->add_option("--seed", cert.build.seed);
  c_cert->add_option("--out", cert.out);
  add_function_flags(c_cert, cert.build.f);

  // oracle
  CertifyFlags oracle;
  auto* c_oracle = app.add_subcommand("oracle", "minimal S+ through the conflict-graph vertex cover");
  c_oracle->add_option("--graph", oracle.graph)->required()->check(CLI::ExistingFile);
  c_oracle->add_option("--failed", oracle.failed)->check(CLI::ExistingFile);
  c_oracle->add_option("--t", oracle.t);
  c_oracle->add_option("--mode", oracle.mode)->check(CLI::IsMember({"deletion", "induced"}));
  c_oracle->add_option("--exact-cap", oracle.exact_cap);
  c_oracle->add_option("--out", oracle.out);

  // attack
  std::string attack_graph, attack_kind = "interval_endpoints", attack_out;
  AttackSpec attack;
  auto* c_attack = app.add_subcommand("attack", "generate a failure set");
  c_attack->add_option("--graph", attack_graph)->required()->check(CLI::ExistingFile);
  c_attack->add_option("--kind", attack_kind)->check(CLI::IsMember({"interval_endpoints", "random", "interval"}));
  c_attack->add_option("--k", attack.k)->required();
  c_attack->add_option("--i", attack.i, "1-based centre rank");
  c_attack->add_option("--t", attack.t);
  c_attack->add_option("--c", attack.c, "robustness constant being probed");
  c_attack->add_option("--seed", attack.seed);
  c_attack->add_option("--out", attack_out);

  // probe
  std::string probe_graph, probe_kind = "random", probe_builder, probe_out;
  std::vector<std::size_t> probe_k{1};
  std::size_t probe_trials = 1, probe_i = 1, probe_cap = kDefaultExactCap, probe_retries = 64;
  double probe_t = 1.0, probe_c = 1.0;
  std::uint64_t probe_seed = 0;
  std::optional<double> probe_threshold;
  FunctionFlags probe_f;
  probe_f.preset = "twok";
  auto* c_probe = app.add_subcommand("probe", "attacks against a builder and the oracle, plus the length census");
  c_probe->add_option("--graph", probe_graph)->required()->check(CLI::ExistingFile);
  c_probe->add_option("--kind", probe_kind)->check(CLI::IsMember({"interval_endpoints", "random", "interval"}));
  c_probe->add_option("--k", probe_k)->delimiter(',');
  c_probe->add_option("--trials", probe_trials);
  c_probe->add_option("--i", probe_i);
  c_probe->add_option("--t", probe_t);
  c_probe->add_option("--c", probe_c);
  c_probe->add_option("--seed", probe_seed);
  c_probe->add_option("--builder", probe_builder)->check(CLI::IsMember({"g2x", "gf"}));
  c_probe->add_option("--exact-cap", probe_cap);
  c_probe->add_option("--retries", probe_retries);
  c_probe->add_option("--threshold", probe_threshold, "census flag threshold (default n/4)");
  c_probe->add_option("--out", probe_out);
  add_function_flags(c_probe, probe_f);

  // sweep
  SweepConfig sweep;
  std::string sweep_out;
  auto* c_sweep = app.add_subcommand("sweep", "random failure sets over a grid of (n, k)");
  c_sweep->add_option("construction", sweep.construction)
      ->required()
      ->check(CLI::IsMember({"g2x", "gf", "grid", "robust-dd"}));
  c_sweep->add_option("--n", sweep.n, "point counts (perfect squares for grid)")->required()->delimiter(',');
  c_sweep->add_option("--k", sweep.k)->required()->delimiter(',');
  c_sweep->add_option("--trials", sweep.trials)->check(CLI::PositiveNumber);
  c_sweep->add_option("--seed", sweep.build.seed);
  c_sweep->add_option("--dim", sweep.build.dim);
  c_sweep->add_option("--t", sweep.build.t);
  c_sweep->add_option("--retries", sweep.retries);
  c_sweep->add_option("--exact-cap", sweep.exact_cap);
  c_sweep->add_option("--oracle-max-n", sweep.oracle_max_n, "run the oracle only up to this n");
  c_sweep->add_option("--out", sweep_out);
  add_function_flags(c_sweep, sweep.build.f);

  // census
  std::string census_graph, census_out;
  double census_t = 1.0;
  std::optional<double> census_threshold;
  FunctionFlags census_f;
  census_f.preset = "twok";
  auto* c_census = app.add_subcommand("census", "edge counts per lower-bound length class");
  c_census->add_option("--graph", census_graph)->required()->check(CLI::ExistingFile);
  c_census->add_option("--t", census_t);
  c_census->add_option("--threshold", census_threshold, "flag classes below this count (default n/4)");
  c_census->add_option("--out", census_out);
  add_function_flags(c_census, census_f);

  // magnification
  std::string mag_graph, mag_out;
  std::size_t s_max = 1;
  auto* c_mag = app.add_subcommand("magnification", "exact min |N(S)| per |S| on small graphs");
  c_mag->add_option("--graph", mag_graph)->required()->check(CLI::ExistingFile);
  c_mag->add_option("--s-max", s_max);
  c_mag->add_option("--out", mag_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_build) {
      if (build_out.empty() && audit) throw UsageError("--audit needs --out");
      Built built = build_construction(construction, build);
      if (audit && built.graph.index_count() > 1) {
        const VertexSet all = built.graph.vertices();
        built.report.emplace_back(
            "measured_stretch",
            format_real(max_stretch(built.graph, all.items(), all, Execution::parallel)));
      }
      const std::string text = report_text(built.report, built.tables);
      if (!build_out.empty()) {
        write_graph(build_out, built.graph);
        emit(build_out + ".report", text, out);
      }
      out << text;
      return kOk;
    }
    if (*c_cert) return cmd_certify(cert, out, err);
    if (*c_oracle) {
      oracle.builder = "oracle";
      const GeomGraph g = read_graph(oracle.graph);
      const VertexSet failed = oracle.failed.empty() ? VertexSet{} : read_vertex_set(oracle.failed);
      failed.check_range(g.index_count());
      const ConflictGraph h = conflict_graph(g, failed, oracle.t);
      err << "conflict_vertices=" << h.vertices.size() << " conflict_edges=" << h.edges.size() << '\n';
      return cmd_certify(oracle, out, err);
    }
    if (*c_attack) {
      const GeomGraph g = read_graph(attack_graph);
      attack.kind = parse_attack_kind(attack_kind);
      VertexSet s;
      if (attack.kind == AttackKind::interval_endpoints) {
        const IntervalAttack a = attack_interval_endpoints(g, attack.i, attack.k, attack.c, attack.t);
        if (a.refused) {
          out << "refused: " << a.reason << '\n';
          return kOk;
        }
        s = a.failed;
        const bool cut = cut_holds(g, s, attack.i, 2.0 * attack.c * attack.t * static_cast<double>(attack.k));
        err << "good_edges=" << a.good_edge_count << " cut_holds=" << (cut ? "true" : "false") << '\n';
      } else if (attack.kind == AttackKind::random) {
        s = attack_random(g.index_count(), attack.k, attack.seed);
      } else {
        s = attack_interval(g.index_count(), attack.i, attack.k);
      }
      std::ostringstream text;
      write_vertex_set(text, s);
      emit(attack_out, text.str(), out);
      return kOk;
    }
    if (*c_probe) {
      const GeomGraph g = read_graph(probe_graph);
      const IteratedFunction f = probe_f.make();
      std::vector<AttackSpec> attacks;
      for (std::size_t k : probe_k) {
        for (std::size_t trial = 0; trial < probe_trials; ++trial) {
          AttackSpec spec;
          spec.kind = parse_attack_kind(probe_kind);
          spec.k = k;
          spec.i = probe_i;
          spec.t = probe_t;
          spec.c = probe_c;
          spec.seed = derive_seed(probe_seed, g.index_count(), k, trial);
          attacks.push_back(spec);
        }
      }
      SplusBuilder builder;
      if (!probe_builder.empty()) {
        builder = [&](const VertexSet& s, std::uint64_t seed) {
          SplusOptions options;
          options.seed = seed;
          options.max_retries = probe_retries;
          SplusOutcome r = probe_builder == "g2x" ? splus_g2x(g, s, options) : splus_gf(g, f, s, options);
          return std::make_pair(r.certificate, r.success);
        };
      }
      const double threshold = probe_threshold.value_or(static_cast<double>(g.index_count()) / 4.0);
      const ProbeReport report = probe(g, probe_t, attacks, builder, probe_cap, f, threshold);
      emit(probe_out, report.to_csv(), out);
      return kOk;
    }
    if (*c_sweep) {
      emit(sweep_out, run_sweep(sweep), out);
      return kOk;
    }
    if (*c_census) {
      const GeomGraph g = read_graph(census_graph);
      const double threshold = census_threshold.value_or(static_cast<double>(g.index_count()) / 4.0);
      emit(census_out, census_csv(census(g, census_f.make(), census_t, threshold)), out);
      return kOk;
    }
    if (*c_mag) {
      const GeomGraph g = read_graph(mag_graph);
      std::ostringstream text;
      text << "s,min_neighborhood\n";
      for (const auto& [s, size] : magnification_bruteforce(g, s_max)) text << s << ',' << size << '\n';
      emit(mag_out, text.str(), out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const BuildError& e) {
    err << "build error: " << e.what() << '\n';
    return kUnverified;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace robspan::cli
