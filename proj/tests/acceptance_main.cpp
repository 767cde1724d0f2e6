// Acceptance gate: one pass/fail line per criterion, exit code = failures.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "property_trials.hpp"
#include "trtlb/experiment.hpp"
#include "trtlb/lattice.hpp"
#include "trtlb/parallel.hpp"
#include "trtlb/reference.hpp"

using namespace trtlb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

ExperimentConfig config_from(const std::string& text) {
  return expand_config(KeyValueConfig::parse_string(text, "acceptance"));
}

DriverOptions quiet_options() {
  DriverOptions opt;
  opt.write = false;
  opt.threads = std::min(8, default_thread_count());
  return opt;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

bool within_rel(double value, double expected, double rel) {
  return std::isfinite(value) && std::fabs(value - expected) <= rel * expected;
}

struct LadderColumn {
  const char* token;
  std::array<double, 6> errors;  // empty slots ignored via compare_rows
  std::array<double, 5> orders;
};

// Compares a 6-row ladder against expected errors (5% relative) and observed
// orders (0.05 absolute).
bool check_ladder(const ConvergenceTable& table,
                  const std::vector<LadderColumn>& expected,
                  std::ostringstream& why) {
  if (table.errors.size() != 6 || table.orders.size() != 5) {
    why << "ladder shape " << table.errors.size() << "x"
        << (table.errors.empty() ? 0 : table.errors[0].size());
    return false;
  }
  bool ok = true;
  for (std::size_t c = 0; c < expected.size(); ++c) {
    for (int r = 0; r < 6; ++r) {
      if (table.blowups[r][c]) {
        why << " [" << expected[c].token << " row " << r << " blew up]";
        ok = false;
        continue;
      }
      const double got = table.errors[r][c], want = expected[c].errors[r];
      if (!within_rel(got, want, 0.05)) {
        why << " [" << expected[c].token << " row " << r << " err "
            << fmt("%.3e vs %.3e", got, want) << "]";
        ok = false;
      }
    }
    for (int r = 0; r < 5; ++r) {
      const double got = table.orders[r][c], want = expected[c].orders[r];
      if (!(std::isfinite(got) && std::fabs(got - want) <= 0.05)) {
        why << " [" << expected[c].token << " order " << r << " "
            << fmt("%.3f vs %.2f", got, want) << "]";
        ok = false;
      }
    }
  }
  return ok;
}

// Every row must decrease strictly across the listed columns: raising the
// anti-symmetric rate cuts the observed error at fixed resolution.
bool check_row_decrease(const ConvergenceTable& table,
                        const std::vector<LadderColumn>& expected,
                        std::ostringstream& why) {
  bool ok = true;
  for (std::size_t r = 0; r < table.errors.size(); ++r) {
    for (std::size_t c = 0; c + 1 < expected.size(); ++c) {
      if (!(table.errors[r][c] > table.errors[r][c + 1])) {
        why << " [row " << r << " not decreasing " << expected[c].token
            << " -> " << expected[c + 1].token << "]";
        ok = false;
      }
    }
  }
  return ok;
}

// Order band for the nearly second-order columns, rows with dx <= 7.81e-3.
bool check_order_band(const ConvergenceTable& table, std::size_t column,
                      std::ostringstream& why) {
  bool ok = true;
  for (int r = 1; r < 5; ++r) {
    if (table.blowups[r + 1][column]) {
      why << " [band row " << r + 1 << " blew up]";
      ok = false;
      continue;
    }
    const double got = table.orders[r][column];
    if (!(got >= 1.25 && got <= 1.45)) {
      why << " [band order " << fmt("%.3f", got) << " outside [1.25,1.45]]";
      ok = false;
    }
  }
  return ok;
}

const std::string ladder_rows = "grid.n_list = 64, 128, 256, 512, 1024, 2048\n";

Outcome criterion_bounds() {
  Outcome out;
  const FluxModel flux = make_burgers_flux();
  const MonotonicityProblem wide = make_problem(make_d1q3(12.0 / 25.0), flux, 1.0);
  const MonotonicityProblem third = make_problem(make_d1q3(1.0 / 3.0), flux, 1.0);
  const DiagonalBound bgk_wide = bgk_upper_bound(wide);
  const DiagonalBound bgk_third = bgk_upper_bound(third);
  const MagicBound magic_wide = magic_max_omega_a(wide);
  const MagicBound magic_third = magic_max_omega_a(third);
  const bool ok =
      !bgk_wide.empty && std::fabs(bgk_wide.omega_max - 25.0 / 24.0) <= 1e-12 &&
      !bgk_third.empty && std::fabs(bgk_third.omega_max - 12.0 / 11.0) <= 1e-12 &&
      !magic_wide.empty && magic_wide.attained &&
      std::fabs(magic_wide.sup - 96.0 / 73.0) <= 1e-12 &&
      !magic_third.empty && magic_third.attained &&
      std::fabs(magic_third.sup - 8.0 / 7.0) <= 1e-12;
  out.pass = ok;
  out.detail = fmt("bgk %.12f and %.12f, ", bgk_wide.omega_max,
                   bgk_third.omega_max) +
               fmt("magic %.12f and %.12f", magic_wide.sup, magic_third.sup);
  return out;
}

Outcome criterion_magic_indicator(OracleCache& cache) {
  Outcome out;
  const ExperimentConfig cfg = config_from(
      "datum.name = indicator\n" + ladder_rows +
      "relax.list = magic:1, magic:169/146, magic:96/73, magic:3/2\n"
      "run.T = 1/4\nrun.oracle_refine = 32\n");
  const ConvergenceTable table = run_convergence(cfg, quiet_options(), &cache);
  const std::vector<LadderColumn> expected = {
      {"magic:1",
       {1.311081e-01, 8.221959e-02, 4.938624e-02, 2.879579e-02, 1.653968e-02,
        9.401841e-03},
       {0.69, 0.74, 0.78, 0.81, 0.83}},
      {"magic:169/146",
       {1.055165e-01, 6.509055e-02, 3.853133e-02, 2.228643e-02, 1.274024e-02,
        7.207734e-03},
       {0.73, 0.77, 0.80, 0.82, 0.84}},
      {"magic:96/73",
       {8.291417e-02, 5.028325e-02, 2.945773e-02, 1.695668e-02, 9.646756e-03,
        5.430101e-03},
       {0.72, 0.81, 0.82, 0.83, 0.85}},
      {"magic:3/2",
       {6.520611e-02, 3.714609e-02, 2.095751e-02, 1.188863e-02, 6.714422e-03,
        3.748689e-03},
       {0.85, 0.85, 0.85, 0.85, 0.87}},
  };
  std::ostringstream why;
  bool ok = check_ladder(table, expected, why);
  ok = check_row_decrease(table, expected, why) && ok;
  out.pass = ok;
  out.detail =
      ok ? "4 settings x 6 rows within 5% / 0.05, rows ordered" : why.str();
  return out;
}

Outcome criterion_magic_hat(OracleCache& cache) {
  Outcome out;
  const ExperimentConfig cfg = config_from(
      "datum.name = hat\n" + ladder_rows +
      "relax.list = magic:1, magic:169/146, magic:96/73, magic:3/2, "
      "magic:199/100\n"
      "run.T = 1/4\nrun.oracle_refine = 32\n");
  const ConvergenceTable table = run_convergence(cfg, quiet_options(), &cache);
  const std::vector<LadderColumn> expected = {
      {"magic:1",
       {5.98e-02, 3.12e-02, 1.59e-02, 8.08e-03, 4.07e-03, 2.05e-03},
       {0.94, 0.97, 0.98, 0.99, 0.99}},
      {"magic:169/146",
       {4.53e-02, 2.32e-02, 1.18e-02, 5.92e-03, 2.98e-03, 1.49e-03},
       {0.97, 0.98, 0.99, 0.99, 1.00}},
      {"magic:96/73",
       {3.38e-02, 1.70e-02, 8.51e-03, 4.27e-03, 2.14e-03, 1.07e-03},
       {1.00, 1.00, 1.00, 1.00, 1.00}},
      {"magic:3/2",
       {2.28e-02, 1.12e-02, 5.53e-03, 2.75e-03, 1.38e-03, 6.87e-04},
       {1.03, 1.01, 1.01, 1.00, 1.00}},
  };
  std::ostringstream why;
  bool ok = check_ladder(table, expected, why);
  ok = check_order_band(table, 4, why) && ok;
  out.pass = ok;
  out.detail =
      ok ? "4 settings within 5% / 0.05; steep column in [1.25,1.45]"
         : why.str();
  return out;
}

Outcome criterion_bgk_tables(OracleCache& cache) {
  Outcome out;
  std::ostringstream why;
  bool ok = true;

  const ExperimentConfig indicator_cfg = config_from(
      "datum.name = indicator\n" + ladder_rows +
      "relax.list = bgk:49/48, bgk:25/24, bgk:3/2\n"
      "run.T = 1/4\nrun.oracle_refine = 32\n");
  const ConvergenceTable indicator =
      run_convergence(indicator_cfg, quiet_options(), &cache);
  const std::vector<LadderColumn> expected_indicator = {
      {"bgk:49/48",
       {1.275905e-01, 7.980439e-02, 4.782796e-02, 2.785129e-02, 1.598664e-02,
        9.081791e-03},
       {0.69, 0.74, 0.79, 0.81, 0.83}},
      {"bgk:25/24",
       {1.241497e-01, 7.744689e-02, 4.631240e-02, 2.693554e-02, 1.545098e-02,
        8.771968e-03},
       {0.69, 0.75, 0.79, 0.81, 0.83}},
      {"bgk:3/2",
       {6.324295e-02, 3.667262e-02, 2.105887e-02, 1.197729e-02, 6.748443e-03,
        3.765325e-03},
       {0.79, 0.82, 0.84, 0.85, 0.87}},
  };
  ok = check_ladder(indicator, expected_indicator, why) && ok;
  ok = check_row_decrease(indicator, expected_indicator, why) && ok;

  const ExperimentConfig hat_cfg = config_from(
      "datum.name = hat\n" + ladder_rows +
      "relax.list = bgk:49/48, bgk:25/24, bgk:3/2, bgk:2\n"
      "run.T = 1/4\nrun.oracle_refine = 32\n");
  const ConvergenceTable hat = run_convergence(hat_cfg, quiet_options(), &cache);
  const std::vector<LadderColumn> expected_hat = {
      {"bgk:49/48",
       {5.77e-02, 3.00e-02, 1.53e-02, 7.76e-03, 3.91e-03, 1.96e-03},
       {0.94, 0.97, 0.98, 0.99, 0.99}},
      {"bgk:25/24",
       {5.56e-02, 2.89e-02, 1.47e-02, 7.45e-03, 3.75e-03, 1.88e-03},
       {0.95, 0.97, 0.98, 0.99, 0.99}},
      {"bgk:3/2",
       {2.28e-02, 1.12e-02, 5.53e-03, 2.75e-03, 1.37e-03, 6.87e-04},
       {1.03, 1.01, 1.01, 1.00, 1.00}},
  };
  ok = check_ladder(hat, expected_hat, why) && ok;
  ok = check_order_band(hat, 3, why) && ok;

  const ExperimentConfig edge_cfg = config_from(
      "datum.name = indicator\ngrid.n = 8192\nrelax.value = bgk:2\n"
      "run.T = 1/4\nrun.oracle = true\nrun.oracle_refine = 8\n"
      "run.oracle_store_stride = 64\n");
  const SingleRunOutputs edge = run_single(edge_cfg, quiet_options());
  const bool edge_ok =
      edge.report.blew_up || edge.report.linf_l1_err > 1e6;
  if (!edge_ok)
    why << " [edge run stayed at " << fmt("%.3e", edge.report.linf_l1_err)
        << "]";
  ok = ok && edge_ok;

  out.pass = ok;
  out.detail = ok ? std::string("ladders within 5% / 0.05; steep hat column in "
                                "[1.25,1.45]; edge run ") +
                        (edge.report.blew_up ? "non-finite"
                                             : fmt("error %.2e",
                                                   edge.report.linf_l1_err))
                  : why.str();
  return out;
}

Outcome criterion_maxprinciple() {
  Outcome out;
  std::ostringstream why;
  bool ok = true;

  const ExperimentConfig magic_cfg = config_from(
      "relax.line = magic\nrelax.from = 1\nrelax.to = 1.36\nrelax.step = 0.01\n"
      "grid.n = 128\nrun.T = 1/4\ndatum.name = indicator\n");
  const MaxPrincipleReport magic = run_maxprinciple(magic_cfg, quiet_options());
  const double magic_sup = 96.0 / 73.0;
  for (const MaxPrincipleRow& row : magic.rows) {
    if (row.omega_a <= magic_sup + 1e-12 && !(row.max_u <= 1.0 + 1e-10)) {
      why << fmt(" [magic %.2f exceeds: %.3e]", row.omega_a, row.max_u - 1.0);
      ok = false;
    }
  }
  const ExperimentConfig at_sup_cfg = config_from(
      "grid.n = 128\nrelax.value = magic:96/73\nrun.T = 1/4\n"
      "datum.name = indicator\n");
  const SingleRunOutputs at_sup = run_single(at_sup_cfg, quiet_options());
  double sup_seen = -2.0;
  for (double v : at_sup.report.sup_u) sup_seen = std::max(sup_seen, v);
  if (!(sup_seen <= 1.0 + 1e-10)) {
    why << fmt(" [at the magic bound max exceeds: %.3e]", sup_seen - 1.0);
    ok = false;
  }
  bool violated_at_135 = false;
  for (const MaxPrincipleRow& row : magic.rows)
    if (std::fabs(row.omega_a - 1.35) < 1e-9)
      violated_at_135 = row.max_u > 1.0 + 1e-6;
  if (!violated_at_135) {
    why << " [no violation at 1.35]";
    ok = false;
  }

  const ExperimentConfig bgk_cfg = config_from(
      "relax.line = bgk\nrelax.from = 1\nrelax.to = 1.40\nrelax.step = 0.01\n"
      "grid.n = 128\nrun.T = 1/4\ndatum.name = indicator\n");
  const MaxPrincipleReport bgk = run_maxprinciple(bgk_cfg, quiet_options());
  double first_violation = -1.0;
  for (const MaxPrincipleRow& row : bgk.rows) {
    if (row.omega_a <= 25.0 / 24.0 + 1e-12 && !(row.max_u <= 1.0 + 1e-10)) {
      why << fmt(" [bgk %.2f exceeds: %.3e]", row.omega_a, row.max_u - 1.0);
      ok = false;
    }
    if (first_violation < 0.0 && row.max_u > 1.0 + 1e-6)
      first_violation = row.omega_a;
  }
  if (!(first_violation >= 100.0 / 77.0 - 0.05 &&
        first_violation <= 100.0 / 77.0 + 0.05)) {
    why << fmt(" [first equal-rate violation at %.4f]", first_violation);
    ok = false;
  }

  out.pass = ok;
  out.detail = ok ? fmt("bounded through the magic limit; violation at 1.35; "
                        "first equal-rate violation at %.4f",
                        first_violation)
                  : why.str();
  return out;
}

Outcome criterion_eqdist() {
  Outcome out;
  std::ostringstream why;
  bool ok = true;

  const ExperimentConfig cfg = config_from(
      "grid.n_list = 64, 128\ndatum.name = indicator\n"
      "datum.list = indicator, indicator-double\n"
      "relax.value = magic:96/73\nrun.T = 1/4\n");
  const EqdistSummary summary = run_eqdist(cfg, quiet_options());
  const auto plateau_of = [&](const std::string& datum,
                              std::int64_t n) -> double {
    for (const EqdistCase& c : summary.cases)
      if (c.datum == datum && c.n == n) return c.plateau_value;
    return -1.0;
  };
  const double base = plateau_of("indicator", 64);
  const double halved = plateau_of("indicator", 128);
  const double doubled = plateau_of("indicator-double", 64);
  const double dx_ratio = halved / base;
  const double tv_ratio = doubled / base;
  if (!(dx_ratio >= 0.4 && dx_ratio <= 0.6)) {
    why << fmt(" [step-halving ratio %.3f outside [0.4,0.6]]", dx_ratio);
    ok = false;
  }
  if (!(tv_ratio >= 1.7 && tv_ratio <= 2.3)) {
    why << fmt(" [variation-doubling ratio %.3f outside [1.7,2.3]]", tv_ratio);
    ok = false;
  }

  const ExperimentConfig rate_cfg = config_from(
      "grid.n_list = 64\ndatum.name = indicator\nrelax.value = bgk:0.25\n"
      "run.T = 1/4\n");
  const EqdistSummary rate = run_eqdist(rate_cfg, quiet_options());
  const double fit = rate.cases.empty() ? -1.0 : rate.cases[0].decay_factor;
  const double slope_ratio = std::log(fit) / std::log(0.75);
  if (!(std::isfinite(slope_ratio) && slope_ratio >= 0.8 &&
        slope_ratio <= 1.2)) {
    why << fmt(" [decay factor %.4f, slope ratio %.3f outside [0.8,1.2]]", fit,
               slope_ratio);
    ok = false;
  }

  out.pass = ok;
  out.detail =
      ok ? fmt("ratios %.3f and %.3f; fitted decay %.4f", dx_ratio, tv_ratio,
               fit)
         : why.str();
  return out;
}

Outcome criterion_magic_fd() {
  Outcome out;
  const SchemeSpec spec = make_d1q3(12.0 / 25.0);
  const FluxModel flux = make_burgers_flux();
  const GridSpec grid = make_grid(1, 128, {{{-1.0, 1.0}}}, 2.0);
  const RelaxPair pair = make_magic_pair(96.0 / 73.0);

  const std::vector<double> averages =
      cell_averages(make_indicator_datum(), grid);
  LatticeState kernel = init_at_equilibrium(spec, flux, averages, grid);
  step(kernel, spec, flux, grid, pair);
  MagicFDState fd{averages, moment(kernel)};

  double worst = 0.0;
  for (int s = 1; s < 100; ++s) {
    magic_fd_step(fd, spec, flux, grid, pair.omega_a);
    step(kernel, spec, flux, grid, pair);
    const std::vector<double> u = moment(kernel);
    for (std::size_t i = 0; i < u.size(); ++i)
      worst = std::max(worst, std::fabs(u[i] - fd.curr[i]));
  }
  out.pass = worst <= 1e-11;
  out.detail = fmt("max discrepancy %.3e over 100 steps", worst);
  return out;
}

Outcome criterion_properties() {
  Outcome out;
  using namespace trtlb_tests;
  const struct {
    const char* name;
    PropertyResult result;
  } checks[] = {
      {"moment conservation", check_moment_conservation(200, 0xACCE0001ULL)},
      {"collision contraction", check_collision_contraction(200, 0xACCE0002ULL)},
      {"run contraction", check_run_l1_contraction(200, 0xACCE0003ULL)},
      {"vector variation", check_tv_vec_nonincrease(200, 0xACCE0004ULL)},
      {"variation comparison", check_tv_moment_inequality(200, 0xACCE0005ULL)},
      {"update monotonicity", check_jacobian_nonnegative(200, 0xACCE0006ULL)},
  };
  std::ostringstream why;
  bool ok = true;
  for (const auto& check : checks) {
    if (!check.result.pass()) {
      why << " [" << check.name << ": " << check.result.failures << "/"
          << check.result.trials << " failed, " << check.result.note << "]";
      ok = false;
    }
  }
  out.pass = ok;
  out.detail = ok ? "6 properties x 200 trials" : why.str();
  return out;
}

Outcome criterion_region_structure() {
  Outcome out;
  std::ostringstream why;
  bool ok = true;
  for (double eps2 : {12.0 / 25.0, 1.0 / 3.0}) {
    const MonotonicityProblem problem =
        make_problem(make_d1q3(eps2), make_burgers_flux(), 1.0);
    const RegionRaster raster =
        rasterize(problem, 512, std::min(8, default_thread_count()));
    const StructuralReport report = structural_checks(raster);
    if (!report.convexity_ok || !report.no_omega_two_ok ||
        !report.diagonal_interior_ok) {
      why << fmt(" [flags failed at eps2 %.3f]", eps2);
      ok = false;
    }
    const double center = (report.diagonal_last_inside + 0.5) * 2.0 / 512.0;
    const double bound = bgk_upper_bound(problem).omega_max;
    if (!(std::fabs(center - bound) <= 2.0 / 512.0)) {
      why << fmt(" [cutoff %.5f vs bound %.5f]", center, bound);
      ok = false;
    }
  }
  out.pass = ok;
  out.detail = ok ? "both presets pass structure and cutoff at 512" : why.str();
  return out;
}

Outcome criterion_planar_invariance() {
  Outcome out;
  std::ostringstream why;
  bool ok = true;

  const SchemeSpec spec = make_d2q5(6.0 / 25.0, 6.0 / 25.0);
  const FluxModel flux = make_rotated_burgers_flux(std::acos(-1.0) / 4.0);
  const MonotonicityProblem problem = make_problem(spec, flux, 1.0);
  const MagicBound magic = magic_max_omega_a(problem);
  const GridSpec grid = make_grid(2, 64, {{{-1.0, 1.0}}, {{-1.0, 1.0}}}, 2.0);
  const InitialDatum datum = make_radial_indicator_datum();
  RunOptions options;
  options.T = 0.25;

  const auto extremes = [&](const RelaxPair& pair, double& sup, double& inf) {
    const RunReport report = run(spec, flux, datum, grid, pair, options);
    sup = -2.0;
    inf = 2.0;
    for (double v : report.sup_u) sup = std::max(sup, v);
    for (double v : report.inf_u) inf = std::min(inf, v);
    return !report.blew_up;
  };

  const RelaxPair inside_magic = make_magic_pair(magic.sup);
  const RelaxPair inside_bgk = make_bgk(bgk_upper_bound(problem).omega_max);
  if (!is_monotone(problem, inside_magic).inside ||
      !is_monotone(problem, inside_bgk).inside) {
    why << " [expected inside parameters were not inside]";
    ok = false;
  }
  for (const RelaxPair& pair : {inside_magic, inside_bgk}) {
    double sup = 0.0, inf = 0.0;
    if (!extremes(pair, sup, inf) || sup > 1.0 + 1e-10 || inf < -1.0 - 1e-10) {
      why << fmt(" [inside pair (%.4f,%.4f) left the band:", pair.omega_s,
                 pair.omega_a) +
                 fmt(" sup %.3e inf %.3e]", sup - 1.0, inf + 1.0);
      ok = false;
    }
  }

  const RelaxPair beyond = make_magic_pair(1.05 * magic.sup);
  double sup = 0.0, inf = 0.0;
  extremes(beyond, sup, inf);
  const bool violated = sup > 1.0 + 1e-10 || inf < -1.0 - 1e-10;
  if (!violated) {
    why << fmt(" [no violation 5%% beyond the bound: sup-1 %.3e]", sup - 1.0);
    ok = false;
  }

  out.pass = ok;
  out.detail = ok ? fmt("bounded inside; violation beyond (sup-1 = %.3e)",
                        sup - 1.0)
                  : why.str();
  return out;
}

int run_criterion(int id, const char* label, Outcome (*body)()) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& err) {
    out.pass = false;
    out.detail = std::string("exception: ") + err.what();
  }
  std::printf("criterion %02d %s: %s (%s)\n", id, label,
              out.pass ? "PASS" : "FAIL", out.detail.c_str());
  std::fflush(stdout);
  return out.pass ? 0 : 1;
}

int run_criterion(int id, const char* label, Outcome (*body)(OracleCache&),
                  OracleCache& cache) {
  Outcome out;
  try {
    out = body(cache);
  } catch (const std::exception& err) {
    out.pass = false;
    out.detail = std::string("exception: ") + err.what();
  }
  std::printf("criterion %02d %s: %s (%s)\n", id, label,
              out.pass ? "PASS" : "FAIL", out.detail.c_str());
  std::fflush(stdout);
  return out.pass ? 0 : 1;
}

}  // namespace

int main() {
  OracleCache cache;
  int failures = 0;
  failures += run_criterion(1, "closed-form bounds", criterion_bounds);
  failures += run_criterion(2, "magic ladder, indicator datum",
                            criterion_magic_indicator, cache);
  failures += run_criterion(3, "magic ladder, hat datum", criterion_magic_hat,
                            cache);
  failures += run_criterion(4, "equal-rate ladders and edge run",
                            criterion_bgk_tables, cache);
  failures += run_criterion(5, "maximum-principle scans", criterion_maxprinciple);
  failures += run_criterion(6, "equilibrium-distance scaling", criterion_eqdist);
  failures += run_criterion(7, "two-step recursion equivalence",
                            criterion_magic_fd);
  failures += run_criterion(8, "randomized property suite", criterion_properties);
  failures += run_criterion(9, "region raster structure",
                            criterion_region_structure);
  failures += run_criterion(10, "planar invariant bounds",
                            criterion_planar_invariance);
  if (failures == 0)
    std::printf("all 10 criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
