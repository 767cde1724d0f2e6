#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "trtlb/experiment.hpp"
#include "trtlb/lattice.hpp"

using namespace trtlb;

namespace {

ExperimentConfig config_from(const std::string& text) {
  return expand_config(KeyValueConfig::parse_string(text, "inline.cfg"));
}

std::filesystem::path fresh_dir(const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::path("tmp_experiment_tests") / name;
  std::filesystem::remove_all(dir);
  return dir;
}

DriverOptions options_into(const std::filesystem::path& dir) {
  DriverOptions opt;
  opt.out_dir = dir.string();
  opt.threads = 2;
  return opt;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file ", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count_crlf(const std::string& text) {
  std::size_t count = 0;
  for (std::size_t at = text.find("\r\n"); at != std::string::npos;
       at = text.find("\r\n", at + 2))
    ++count;
  return count;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("scheme check reports bounds and verdicts") {
  const auto dir = fresh_dir("check");
  const ExperimentConfig cfg = config_from(
      "relax.list = magic:96/73, bgk:25/24, bgk:1.5\nrun.T = 0.25\n");
  const CheckReport report = run_check(cfg, options_into(dir));

  CHECK(report.violations.empty());
  CHECK(report.problem.eps_zero == doctest::Approx(1.0 / 25.0).epsilon(1e-14));
  REQUIRE(report.problem.g_link.size() == 1);
  CHECK(report.problem.g_link[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(report.bgk.omega_max == doctest::Approx(25.0 / 24.0).epsilon(1e-12));
  CHECK(report.magic.sup == doctest::Approx(96.0 / 73.0).epsilon(1e-12));
  CHECK(report.magic.attained);
  REQUIRE(report.verdicts.size() == 3);
  CHECK(report.verdicts[0].inside);
  CHECK(report.verdicts[1].inside);
  CHECK(!report.verdicts[2].inside);

  CHECK(count_crlf(slurp(dir / "check_scheme.csv")) == 1);  // no violations
  CHECK(count_crlf(slurp(dir / "check_bounds.csv")) == 2);
  CHECK(count_crlf(slurp(dir / "check_points.csv")) == 4);
}

TEST_CASE("region files carry the raster") {
  const auto dir = fresh_dir("region");
  const ExperimentConfig cfg = config_from("run.region_resolution = 16\n");
  const RegionOutputs out = run_region(cfg, options_into(dir));

  CHECK(out.raster.resolution == 16);
  CHECK(out.structural.convexity_ok);
  CHECK(out.structural.no_omega_two_ok);
  CHECK(out.structural.inside_count > 0);
  CHECK(out.bgk.omega_max == doctest::Approx(25.0 / 24.0).epsilon(1e-12));

  const std::string csv = slurp(dir / "region.csv");
  CHECK(count_crlf(csv) == 257);  // header plus 16 x 16 cells
  CHECK(csv.rfind("omega_s,omega_a,inside\r\n", 0) == 0);

  const std::string pgm = slurp(dir / "region.pgm");
  const std::string header = "P5\n16 16\n255\n";
  REQUIRE(pgm.size() == header.size() + 256);
  CHECK(pgm.rfind(header, 0) == 0);

  // Raster cells match membership at the sampled centers.
  const MonotonicityProblem problem = out.problem;
  for (int j = 0; j < 16; ++j)
    for (int i = 0; i < 16; ++i) {
      const RelaxPair at{(i + 0.5) * 0.125, (j + 0.5) * 0.125};
      CHECK(out.raster.at(i, j) == is_monotone(problem, at).inside);
    }

  const std::string structural = slurp(dir / "region_structural.csv");
  CHECK(count_crlf(structural) == 2);
}

TEST_CASE("single runs write their series and final snapshot") {
  const auto dir = fresh_dir("single");
  const ExperimentConfig cfg = config_from(
      "grid.n = 128\nrelax.value = magic:96/73\nrun.T = 0.25\n"
      "run.oracle = true\nrun.oracle_refine = 8\n");
  OracleCache cache;
  const SingleRunOutputs magic = run_single(cfg, options_into(dir), &cache);

  CHECK(magic.report.total_steps == 32);  // dt = dx / lambda = 1/128
  CHECK(magic.report.final_time == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(!magic.report.blew_up);
  CHECK(magic.report.linf_l1_err > 0.0);
  CHECK(magic.report.linf_l1_err < 0.2);

  const std::string series = slurp(dir / "run_series.csv");
  CHECK(count_crlf(series) == 34);  // header + steps 0..32
  CHECK(series.rfind("step,t,sup_u,inf_u,tv_u,tv_vec,eq_dist,l1_err\r\n", 0) == 0);
  const std::string snapshot = slurp(dir / "snapshot_final.csv");
  CHECK(count_crlf(snapshot) == 129);
  CHECK(snapshot.rfind("x_1,u,f_1,f_2,f_3\r\n", 0) == 0);

  // The equal-rate run at its own admissibility edge is less accurate.
  const auto dir2 = fresh_dir("single-bgk");
  const ExperimentConfig bgk_cfg = config_from(
      "grid.n = 128\nrelax.value = bgk:25/24\nrun.T = 0.25\n"
      "run.oracle = true\nrun.oracle_refine = 8\n");
  const SingleRunOutputs bgk = run_single(bgk_cfg, options_into(dir2), &cache);
  CHECK(magic.report.linf_l1_err < bgk.report.linf_l1_err);

  const GridSpec grid = make_grid(1, 128, {{{-1.0, 1.0}}}, 2.0);
  CHECK(l1_error(magic.report.final_u, bgk.report.final_u, grid) > 1e-4);
}

TEST_CASE("a zero-time run returns the averages") {
  const auto dir = fresh_dir("zero-time");
  const ExperimentConfig cfg = config_from(
      "grid.n = 32\nrelax.value = bgk:1\nrun.T = 0\ndatum.name = hat\n");
  const SingleRunOutputs out = run_single(cfg, options_into(dir));
  CHECK(out.report.total_steps == 0);
  const GridSpec grid = make_grid(1, 32, {{{-1.0, 1.0}}}, 2.0);
  const auto averages = cell_averages(make_hat_datum(), grid);
  REQUIRE(out.report.final_u.size() == averages.size());
  for (std::size_t i = 0; i < averages.size(); ++i)
    CHECK(out.report.final_u[i] == doctest::Approx(averages[i]).epsilon(1e-14));
  CHECK(count_crlf(slurp(dir / "run_series.csv")) == 2);
}

TEST_CASE("quick convergence ladders truncate and stay ordered") {
  const auto dir = fresh_dir("convergence");
  const ExperimentConfig cfg = config_from(
      "grid.n_list = 64, 128, 256, 512\n"
      "relax.list = magic:96/73, bgk:1\n"
      "run.T = 0.25\n");
  DriverOptions opt = options_into(dir);
  opt.quick = true;
  OracleCache cache;
  const ConvergenceTable table = run_convergence(cfg, opt, &cache);

  REQUIRE(table.n == std::vector<std::int64_t>{64, 128, 256});
  REQUIRE(table.labels.size() == 2);
  REQUIRE(table.errors.size() == 3);
  REQUIRE(table.orders.size() == 2);
  for (std::size_t row = 0; row < table.errors.size(); ++row)
    for (std::size_t col = 0; col < table.errors[row].size(); ++col) {
      CHECK(table.errors[row][col] > 0.0);
      CHECK(!table.blowups[row][col]);
      if (row > 0) CHECK(table.errors[row][col] < table.errors[row - 1][col]);
    }
  for (const auto& row : table.orders)
    for (double order : row) {
      CHECK(order > 0.4);
      CHECK(order < 1.2);
    }
  CHECK(table.dx[0] == doctest::Approx(2.0 / 64.0).epsilon(1e-14));

  const std::string magic_csv = slurp(dir / "table_magic_96_73.csv");
  CHECK(count_crlf(magic_csv) == 4);
  CHECK(magic_csv.rfind("dx,error,order\r\n", 0) == 0);
  slurp(dir / "table_bgk_1.csv");
}

TEST_CASE("ladder errors are stable under oracle refinement") {
  const std::string base =
      "grid.n_list = 64\nrelax.value = magic:96/73\nrun.T = 0.25\n";
  OracleCache cache;
  DriverOptions opt;
  opt.write = false;
  const ConvergenceTable coarse = run_convergence(
      config_from(base + "run.oracle_refine = 8\n"), opt, &cache);
  const ConvergenceTable fine = run_convergence(
      config_from(base + "run.oracle_refine = 16\n"), opt, &cache);
  const double a = coarse.errors[0][0], b = fine.errors[0][0];
  CHECK(std::fabs(a - b) <= 0.05 * std::max(a, b));
}

TEST_CASE("equilibrium distances plateau and decay") {
  const auto dir = fresh_dir("eqdist");
  const ExperimentConfig cfg = config_from(
      "grid.n_list = 64, 128\ndatum.name = indicator\n"
      "relax.value = magic:96/73\nrun.T = 0.25\n");
  const EqdistSummary summary = run_eqdist(cfg, options_into(dir));

  REQUIRE(summary.cases.size() == 2);
  for (const EqdistCase& c : summary.cases) {
    CHECK(c.datum == "indicator");
    CHECK(c.report.eq_dist.front() == doctest::Approx(0.0));
    CHECK(c.plateau_value > 0.0);
  }
  const double ratio = summary.cases[1].plateau_value /
                       summary.cases[0].plateau_value;
  CHECK(ratio > 0.35);
  CHECK(ratio < 0.65);

  slurp(dir / "eqdist_indicator_n64_magic_96_73.csv");
  slurp(dir / "eqdist_indicator_n128_magic_96_73.csv");
  const std::string summary_csv = slurp(dir / "eqdist_summary.csv");
  CHECK(count_crlf(summary_csv) == 3);

  // The equal-rate kernel relaxes geometrically at rate 1 - omega.
  const ExperimentConfig bgk_cfg = config_from(
      "grid.n_list = 64\ndatum.name = indicator\n"
      "relax.value = bgk:0.25\nrun.T = 0.25\n");
  DriverOptions nowrite;
  nowrite.write = false;
  const EqdistSummary bgk = run_eqdist(bgk_cfg, nowrite);
  REQUIRE(bgk.cases.size() == 1);
  const double fit = bgk.cases[0].decay_factor;
  REQUIRE(std::isfinite(fit));
  const double ratio_log = std::log(fit) / std::log(0.75);
  CHECK(ratio_log > 0.8);
  CHECK(ratio_log < 1.2);
}

TEST_CASE("parameter scans bracket the admissibility edge") {
  const auto dir = fresh_dir("maxprinciple");
  const ExperimentConfig cfg = config_from(
      "relax.line = magic\nrelax.from = 1.30\nrelax.to = 1.35\n"
      "relax.step = 0.05\ngrid.n = 128\nrun.T = 0.25\n");
  const MaxPrincipleReport report = run_maxprinciple(cfg, options_into(dir));

  CHECK(report.line == "magic");
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].omega_a == doctest::Approx(1.30).epsilon(1e-12));
  CHECK(report.rows[1].omega_a == doctest::Approx(1.35).epsilon(1e-12));
  CHECK(!report.rows[0].blew_up);
  CHECK(!report.rows[1].blew_up);
  CHECK(report.rows[0].max_u <= 1.0 + 1e-10);
  CHECK(report.rows[0].min_u >= -1e-10);
  CHECK(report.rows[1].max_u > 1.0 + 1e-6);

  const std::string csv = slurp(dir / "maxprinciple.csv");
  CHECK(count_crlf(csv) == 3);
  CHECK(csv.rfind("omega_a,max_u,min_u,blowup\r\n", 0) == 0);
}

TEST_CASE("oracle solutions are cached by their key") {
  const ExperimentConfig cfg = config_from("grid.n = 64\nrun.T = 0.25\n");
  OracleCache cache;
  const auto first = cache.projected(cfg, 64, 8, 1);
  const auto second = cache.projected(cfg, 64, 8, 1);
  CHECK(first.get() == second.get());
  const auto refined = cache.projected(cfg, 64, 16, 1);
  CHECK(first.get() != refined.get());
  REQUIRE(!first->times.empty());
  CHECK(first->stored.n == 64);
  CHECK(first->times.back() == doctest::Approx(0.25).epsilon(1e-12));
}

}  // TEST_SUITE
