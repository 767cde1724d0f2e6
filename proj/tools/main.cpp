// Command line front end over the experiment drivers.
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trtlb/experiment.hpp"
#include "trtlb/parallel.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  int threads = trtlb::default_thread_count();
  int oracle_refine = 0;
  bool quick = false;
  bool no_write = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("-c,--config", args.config_path, "config file (key = value lines)")
      ->required();
  cmd->add_option("-o,--out", args.out_dir,
                  "output directory, overrides output.dir");
  cmd->add_option("-t,--threads", args.threads, "worker threads");
  cmd->add_option("--oracle-refine", args.oracle_refine,
                  "override run.oracle_refine");
  cmd->add_flag("--quick", args.quick,
                "shorten ladders, coarsen scans and rasters");
  cmd->add_flag("--no-write", args.no_write, "skip file outputs");
}

trtlb::ExperimentConfig load(const CommonArgs& args) {
  return trtlb::expand_config(trtlb::KeyValueConfig::parse_file(args.config_path));
}

trtlb::DriverOptions driver_options(const CommonArgs& args) {
  trtlb::DriverOptions opt;
  opt.out_dir = args.out_dir;
  opt.threads = args.threads > 0 ? args.threads : 1;
  opt.quick = args.quick;
  opt.oracle_refine = args.oracle_refine;
  opt.write = !args.no_write;
  return opt;
}

void print_bounds(const trtlb::DiagonalBound& bgk, const trtlb::MagicBound& magic) {
  if (bgk.empty)
    std::printf("bgk diagonal:   empty\n");
  else
    std::printf("bgk diagonal:   omega <= %.12g\n", bgk.omega_max);
  if (magic.empty)
    std::printf("magic segment:  empty\n");
  else
    std::printf("magic segment:  omega_a %s %.12g%s\n",
                magic.attained ? "<=" : "<", magic.sup,
                magic.attained ? "" : " (open)");
}

int cmd_check(const CommonArgs& args) {
  const trtlb::ExperimentConfig cfg = load(args);
  const trtlb::CheckReport report = trtlb::run_check(cfg, driver_options(args));
  if (report.violations.empty()) {
    std::printf("scheme %s: consistent\n", cfg.scheme.name.c_str());
  } else {
    std::printf("scheme %s: %zu violation(s)\n", cfg.scheme.name.c_str(),
                report.violations.size());
    for (const auto& v : report.violations)
      std::printf("  %s (residual %.3e)\n", v.what.c_str(), v.residual);
  }
  std::printf("eps0 = %.12g, links:", report.problem.eps_zero);
  for (std::size_t l = 0; l < report.problem.eps_link.size(); ++l)
    std::printf(" eps=%.12g G=%.12g", report.problem.eps_link[l],
                report.problem.g_link[l]);
  std::printf("\n");
  print_bounds(report.bgk, report.magic);
  for (std::size_t i = 0; i < cfg.relax.size(); ++i) {
    const auto& v = report.verdicts[i];
    double link_min = v.margin_zero;
    for (double m : v.margin_link) link_min = std::min(link_min, m);
    std::printf("%-14s (%.6g, %.6g): %s  worst margin %.3e\n",
                cfg.relax[i].label.c_str(), cfg.relax[i].pair.omega_s,
                cfg.relax[i].pair.omega_a, v.inside ? "inside" : "outside",
                link_min);
  }
  return report.violations.empty() ? 0 : 1;
}

int cmd_run(const CommonArgs& args) {
  const trtlb::ExperimentConfig cfg = load(args);
  const trtlb::SingleRunOutputs out =
      trtlb::run_single(cfg, driver_options(args));
  const trtlb::RunReport& r = out.report;
  std::printf("%lld steps to t = %.12g\n",
              static_cast<long long>(r.total_steps), r.final_time);
  if (!r.sup_u.empty())
    std::printf("final sup %.12g, inf %.12g, tv %.12g, eq_dist %.6e\n",
                r.sup_u.back(), r.inf_u.back(), r.tv_u.back(),
                r.eq_dist.back());
  if (!r.l1_err.empty())
    std::printf("max l1 error vs reference: %.6e\n", r.linf_l1_err);
  if (r.blew_up) {
    std::printf("run left the finite range at step %lld\n",
                static_cast<long long>(r.blowup_step));
    return 3;
  }
  return 0;
}

int cmd_convergence(const CommonArgs& args) {
  const trtlb::ExperimentConfig cfg = load(args);
  const trtlb::ConvergenceTable table =
      trtlb::run_convergence(cfg, driver_options(args));
  for (std::size_t c = 0; c < table.labels.size(); ++c) {
    std::printf("[%s]  omega_s=%.6g omega_a=%.6g\n", table.labels[c].c_str(),
                table.relax[c].omega_s, table.relax[c].omega_a);
    std::printf("  %12s  %12s  %6s\n", "dx", "error", "order");
    for (std::size_t r = 0; r < table.n.size(); ++r) {
      if (table.blowups[r][c])
        std::printf("  %12.4e  %12s  %6s\n", table.dx[r], "blow-up", "-");
      else if (r == 0)
        std::printf("  %12.4e  %12.4e  %6s\n", table.dx[r], table.errors[r][c],
                    "-");
      else
        std::printf("  %12.4e  %12.4e  %6.2f\n", table.dx[r],
                    table.errors[r][c], table.orders[r - 1][c]);
    }
  }
  return 0;
}

int cmd_region(const CommonArgs& args) {
  const trtlb::ExperimentConfig cfg = load(args);
  const trtlb::RegionOutputs out = trtlb::run_region(cfg, driver_options(args));
  std::printf("resolution %d, %lld cells inside\n", out.raster.resolution,
              static_cast<long long>(out.structural.inside_count));
  std::printf("convexity along lines: %s\n",
              out.structural.convexity_ok ? "ok" : "FAILED");
  std::printf("omega = 2 edges clear: %s\n",
              out.structural.no_omega_two_ok ? "ok" : "FAILED");
  std::printf("diagonal interior (%lld cells checked): %s\n",
              static_cast<long long>(out.structural.diagonal_checked),
              out.structural.diagonal_interior_ok ? "ok" : "FAILED");
  print_bounds(out.bgk, out.magic);
  const bool ok = out.structural.convexity_ok && out.structural.no_omega_two_ok &&
                  out.structural.diagonal_interior_ok;
  return ok ? 0 : 1;
}

int cmd_eqdist(const CommonArgs& args) {
  const trtlb::ExperimentConfig cfg = load(args);
  const trtlb::EqdistSummary summary =
      trtlb::run_eqdist(cfg, driver_options(args));
  std::printf("%-16s %6s %-14s %12s %12s\n", "datum", "n", "relax", "plateau",
              "decay");
  for (const auto& c : summary.cases) {
    std::printf("%-16s %6lld %-14s %12.4e ", c.datum.c_str(),
                static_cast<long long>(c.n), c.relax.label.c_str(),
                c.plateau_value);
    // The transient can die off in fewer samples than the fit needs.
    if (std::isfinite(c.decay_factor))
      std::printf("%12.6f\n", c.decay_factor);
    else
      std::printf("%12s\n", "-");
  }
  return 0;
}

int cmd_maxprinciple(const CommonArgs& args) {
  const trtlb::ExperimentConfig cfg = load(args);
  const trtlb::MaxPrincipleReport report =
      trtlb::run_maxprinciple(cfg, driver_options(args));
  std::printf("scan along the %s line\n", report.line.c_str());
  std::printf("%10s %22s %22s\n", "omega_a", "max_u", "min_u");
  for (const auto& row : report.rows) {
    if (row.blew_up)
      std::printf("%10.4f %22s %22s\n", row.omega_a, "blow-up", "blow-up");
    else
      std::printf("%10.4f %22.16g %22.16g\n", row.omega_a, row.max_u,
                  row.min_u);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-relaxation-times kinetic solver for scalar conservation laws"};
  app.require_subcommand(1);

  CommonArgs args;
  CLI::App* check = app.add_subcommand(
      "check", "validate a scheme and report monotonicity bounds");
  CLI::App* run = app.add_subcommand("run", "single time-dependent solve");
  CLI::App* convergence =
      app.add_subcommand("convergence", "grid ladder against a Godunov reference");
  CLI::App* region =
      app.add_subcommand("region", "rasterize the monotonicity region");
  CLI::App* eqdist = app.add_subcommand(
      "eqdist", "distance-to-equilibrium decay across data and grids");
  CLI::App* maxprinciple = app.add_subcommand(
      "maxprinciple", "extrema growth along a relaxation-parameter line");
  for (CLI::App* cmd :
       {check, run, convergence, region, eqdist, maxprinciple})
    add_common(cmd, args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) return cmd_check(args);
    if (app.got_subcommand(run)) return cmd_run(args);
    if (app.got_subcommand(convergence)) return cmd_convergence(args);
    if (app.got_subcommand(region)) return cmd_region(args);
    if (app.got_subcommand(eqdist)) return cmd_eqdist(args);
    if (app.got_subcommand(maxprinciple)) return cmd_maxprinciple(args);
  } catch (const trtlb::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
