#include "trtlb/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "trtlb/io.hpp"
#include "trtlb/lattice.hpp"
#include "trtlb/parallel.hpp"

namespace trtlb {

namespace {

std::string sanitize(const std::string& label) {
  std::string out;
  for (char c : label)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

std::string join_path(const std::string& dir, const std::string& file) {
  if (dir.empty()) return file;
  return dir.back() == '/' ? dir + file : dir + "/" + file;
}

std::string effective_out_dir(const ExperimentConfig& cfg,
                              const DriverOptions& opt) {
  return opt.out_dir.empty() ? cfg.out_dir : opt.out_dir;
}

void write_manifest(const ExperimentConfig& cfg, const DriverOptions& opt) {
  const std::string dir = effective_out_dir(cfg, opt);
  ensure_directory(dir);
  write_text_file(join_path(dir, "manifest.cfg"), cfg.manifest());
}

GridSpec target_grid(const ExperimentConfig& cfg, std::int64_t n) {
  return make_grid(cfg.grid_d, n, cfg.domain, cfg.scheme.lambda);
}

InitialDatum datum_with_bound(const ExperimentConfig& cfg,
                              const std::string& name) {
  InitialDatum datum =
      name == cfg.datum_name ? cfg.datum : datum_by_name(name, cfg.grid_d);
  datum.m = cfg.m;
  return datum;
}

// Probe returning the L1 distance to the nearest oracle snapshot.
std::function<double(const std::vector<double>&, std::int64_t, double)>
make_error_probe(std::shared_ptr<const OracleSolution> oracle,
                 const GridSpec& grid) {
  return [oracle, grid](const std::vector<double>& u, std::int64_t, double t) {
    return l1_error(u, nearest_snapshot(*oracle, t), grid);
  };
}

void write_series(const std::string& path, const RunReport& report) {
  CsvWriter csv(path, {"step", "t", "sup_u", "inf_u", "tv_u", "tv_vec",
                       "eq_dist", "l1_err"});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    csv.row({static_cast<double>(report.steps[i]), report.times[i],
             report.sup_u[i], report.inf_u[i], report.tv_u[i], report.tv_vec[i],
             report.eq_dist[i],
             i < report.l1_err.size() ? report.l1_err[i] : nan});
  }
}

void write_snapshot(const std::string& path, const ExperimentConfig& cfg,
                    const GridSpec& grid, const RunReport& report) {
  std::vector<std::string> header;
  for (int a = 0; a < grid.d; ++a)
    header.push_back("x_" + std::to_string(a + 1));
  header.push_back("u");
  const int q = cfg.scheme.q();
  for (int k = 0; k < q; ++k)
    header.push_back("f_" + std::to_string(k + 1));
  CsvWriter csv(path, header);

  const std::int64_t cells = grid.cells();
  std::vector<std::int64_t> coord(grid.d);
  std::vector<double> row(header.size());
  for (std::int64_t i = 0; i < cells; ++i) {
    grid.unravel(i, coord.data());
    for (int a = 0; a < grid.d; ++a) row[a] = grid.center(a, coord[a]);
    row[grid.d] = report.final_u[i];
    for (int k = 0; k < q; ++k)
      row[grid.d + 1 + k] = report.final_f[static_cast<std::int64_t>(k) * cells + i];
    csv.row(row);
  }
}

}  // namespace

std::shared_ptr<const OracleSolution> OracleCache::projected(
    const ExperimentConfig& cfg, std::int64_t n, int refine,
    std::int64_t store_stride) {
  std::ostringstream key;
  key << cfg.datum_name << "|" << cfg.flux.name << "|" << format_number(cfg.flux_theta)
      << "|" << cfg.scheme.lambda << "|" << n << "|" << refine << "|"
      << store_stride << "|" << format_number(cfg.T) << "|" << cfg.grid_d;
  for (const auto& dom : cfg.domain)
    key << "|" << format_number(dom[0]) << "," << format_number(dom[1]);
  const std::string k = key.str();
  const auto it = entries_.find(k);
  if (it != entries_.end()) return it->second;

  const GridSpec target = target_grid(cfg, n);
  const GridSpec fine = refine_grid(target, refine);
  GodunovOptions options;
  options.align_dt = target.dt;
  options.store_stride = store_stride;
  options.project_target = &target;
  InitialDatum datum = datum_with_bound(cfg, cfg.datum_name);
  auto solution = std::make_shared<OracleSolution>(
      godunov_solve(cfg.flux, datum, fine, cfg.T, options));
  entries_[k] = solution;
  return solution;
}

CheckReport run_check(const ExperimentConfig& cfg, const DriverOptions& opt) {
  CheckReport report;
  report.violations = validate(cfg.scheme);
  report.problem =
      make_problem(cfg.scheme, cfg.flux, cfg.m, cfg.derivative_samples);
  report.bgk = bgk_upper_bound(report.problem);
  report.magic = magic_max_omega_a(report.problem);
  for (const RelaxChoice& choice : cfg.relax)
    report.verdicts.push_back(is_monotone(report.problem, choice.pair));

  if (opt.write) {
    const std::string dir = effective_out_dir(cfg, opt);
    write_manifest(cfg, opt);
    {
      CsvWriter csv(join_path(dir, "check_scheme.csv"), {"violation", "residual"});
      for (const SchemeViolation& v : report.violations)
        csv.row(std::vector<std::string>{v.what, format_number(v.residual)});
    }
    {
      CsvWriter csv(join_path(dir, "check_bounds.csv"),
                    {"bgk_empty", "bgk_upper", "magic_empty", "magic_sup",
                     "magic_attained"});
      csv.row({report.bgk.empty ? 1.0 : 0.0, report.bgk.omega_max,
               report.magic.empty ? 1.0 : 0.0, report.magic.sup,
               report.magic.attained ? 1.0 : 0.0});
    }
    {
      CsvWriter csv(join_path(dir, "check_points.csv"),
                    {"label", "omega_s", "omega_a", "inside", "margin_zero",
                     "margin_link_min"});
      for (std::size_t i = 0; i < cfg.relax.size(); ++i) {
        const MonotonicityVerdict& v = report.verdicts[i];
        double link_min = std::numeric_limits<double>::infinity();
        for (double m : v.margin_link) link_min = std::min(link_min, m);
        csv.row({cfg.relax[i].label, format_number(cfg.relax[i].pair.omega_s),
                 format_number(cfg.relax[i].pair.omega_a),
                 v.inside ? "1" : "0", format_number(v.margin_zero),
                 format_number(link_min)});
      }
    }
  }
  return report;
}

SingleRunOutputs run_single(const ExperimentConfig& cfg, const DriverOptions& opt,
                            OracleCache* cache) {
  if (cfg.n < 1)
    throw ConfigError("grid.n is required for a single run", "grid.n", 0);
  if (cfg.relax.size() != 1)
    throw ConfigError("exactly one relax setting is required for a single run",
                      "relax.value", 0);

  const GridSpec grid = target_grid(cfg, cfg.n);
  RunOptions options;
  options.T = cfg.T;
  options.cadence = cfg.cadence;
  options.subsamples = cfg.average_subsamples;

  OracleCache local;
  if (cfg.with_oracle) {
    OracleCache* use = cache ? cache : &local;
    const int refine =
        opt.oracle_refine > 0 ? opt.oracle_refine : cfg.oracle_refine;
    auto oracle = use->projected(cfg, cfg.n, refine, cfg.oracle_store_stride);
    options.error_probe = make_error_probe(oracle, grid);
  }

  SingleRunOutputs out;
  out.report = run(cfg.scheme, cfg.flux, datum_with_bound(cfg, cfg.datum_name),
                   grid, cfg.relax[0].pair, options);

  if (opt.write) {
    const std::string dir = effective_out_dir(cfg, opt);
    write_manifest(cfg, opt);
    write_series(join_path(dir, "run_series.csv"), out.report);
    write_snapshot(join_path(dir, "snapshot_final.csv"), cfg, grid, out.report);
  }
  return out;
}

ConvergenceTable run_convergence(const ExperimentConfig& cfg,
                                 const DriverOptions& opt, OracleCache* cache) {
  if (cfg.n_list.empty())
    throw ConfigError("grid.n_list is required for a convergence study",
                      "grid.n_list", 0);
  if (cfg.relax.empty())
    throw ConfigError("relax.value or relax.list is required", "relax.list", 0);
  if (!(cfg.T > 0.0))
    throw ConfigError("run.T must be positive for a convergence study", "run.T",
                      0);

  ConvergenceTable table;
  std::vector<std::int64_t> rows = cfg.n_list;
  int refine = opt.oracle_refine > 0 ? opt.oracle_refine : cfg.oracle_refine;
  if (opt.quick) {
    if (rows.size() > 3) rows.resize(3);
    refine = std::min(refine, 8);
  }
  for (const RelaxChoice& choice : cfg.relax) {
    table.labels.push_back(choice.label);
    table.relax.push_back(choice.pair);
  }
  table.n = rows;

  OracleCache local;
  OracleCache* use = cache ? cache : &local;
  const InitialDatum datum = datum_with_bound(cfg, cfg.datum_name);

  for (std::int64_t n : rows) {
    const GridSpec grid = target_grid(cfg, n);
    table.dx.push_back(grid.dx);
    auto oracle = use->projected(cfg, n, refine, cfg.oracle_store_stride);

    std::vector<double> errors(cfg.relax.size(), 0.0);
    std::vector<std::uint8_t> blowups(cfg.relax.size(), 0);
    parallel_for(static_cast<std::int64_t>(cfg.relax.size()), opt.threads,
                 [&](std::int64_t c) {
                   RunOptions options;
                   options.T = cfg.T;
                   options.cadence = 1;
                   options.subsamples = cfg.average_subsamples;
                   options.error_probe = make_error_probe(oracle, grid);
                   const RunReport report =
                       run(cfg.scheme, cfg.flux, datum, grid,
                           cfg.relax[c].pair, options);
                   errors[c] = report.linf_l1_err;
                   blowups[c] = report.blew_up ? 1 : 0;
                 });
    table.errors.push_back(errors);
    table.blowups.push_back(blowups);
  }

  table.orders.resize(rows.size() > 1 ? rows.size() - 1 : 0);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    table.orders[r - 1].resize(cfg.relax.size());
    for (std::size_t c = 0; c < cfg.relax.size(); ++c) {
      const double prev = table.errors[r - 1][c];
      const double curr = table.errors[r][c];
      table.orders[r - 1][c] = (prev > 0.0 && curr > 0.0)
                                   ? std::log2(prev / curr)
                                   : std::numeric_limits<double>::quiet_NaN();
    }
  }

  if (opt.write) {
    const std::string dir = effective_out_dir(cfg, opt);
    write_manifest(cfg, opt);
    for (std::size_t c = 0; c < cfg.relax.size(); ++c) {
      CsvWriter csv(join_path(dir, "table_" + sanitize(table.labels[c]) + ".csv"),
                    {"dx", "error", "order"});
      for (std::size_t r = 0; r < rows.size(); ++r) {
        csv.row(std::vector<std::string>{
            format_number(table.dx[r]), format_number(table.errors[r][c]),
            r == 0 ? "" : format_number(table.orders[r - 1][c])});
      }
    }
  }
  return table;
}

RegionOutputs run_region(const ExperimentConfig& cfg, const DriverOptions& opt) {
  RegionOutputs out;
  out.problem =
      make_problem(cfg.scheme, cfg.flux, cfg.m, cfg.derivative_samples);
  const int res =
      opt.quick ? std::min(cfg.region_resolution, 64) : cfg.region_resolution;
  out.raster = rasterize(out.problem, res, opt.threads);
  out.structural = structural_checks(out.raster);
  out.bgk = bgk_upper_bound(out.problem);
  out.magic = magic_max_omega_a(out.problem);

  if (opt.write) {
    const std::string dir = effective_out_dir(cfg, opt);
    write_manifest(cfg, opt);
    {
      CsvWriter csv(join_path(dir, "region.csv"),
                    {"omega_s", "omega_a", "inside"});
      const double cell = 2.0 / res;
      for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i)
          csv.row({(i + 0.5) * cell, (j + 0.5) * cell,
                   out.raster.at(i, j) ? 1.0 : 0.0});
    }
    if (cfg.write_pgm) {
      std::vector<std::uint8_t> pixels(static_cast<std::size_t>(res) * res);
      for (int j = 0; j < res; ++j)
        for (int i = 0; i < res; ++i)
          pixels[static_cast<std::size_t>(res) * (res - 1 - j) + i] =
              out.raster.at(i, j) ? 0 : 255;
      write_pgm(join_path(dir, "region.pgm"), res, res, pixels);
    }
    {
      CsvWriter csv(join_path(dir, "region_structural.csv"),
                    {"convexity_ok", "no_omega_two_ok", "diagonal_interior_ok",
                     "inside_count", "diagonal_checked", "diagonal_last_inside",
                     "bgk_empty", "bgk_upper", "magic_empty", "magic_sup",
                     "magic_attained"});
      csv.row({out.structural.convexity_ok ? 1.0 : 0.0,
               out.structural.no_omega_two_ok ? 1.0 : 0.0,
               out.structural.diagonal_interior_ok ? 1.0 : 0.0,
               static_cast<double>(out.structural.inside_count),
               static_cast<double>(out.structural.diagonal_checked),
               static_cast<double>(out.structural.diagonal_last_inside),
               out.bgk.empty ? 1.0 : 0.0, out.bgk.omega_max,
               out.magic.empty ? 1.0 : 0.0, out.magic.sup,
               out.magic.attained ? 1.0 : 0.0});
    }
  }
  return out;
}

EqdistSummary run_eqdist(const ExperimentConfig& cfg, const DriverOptions& opt) {
  std::vector<std::int64_t> rows = cfg.n_list;
  if (rows.empty() && cfg.n > 0) rows = {cfg.n};
  if (rows.empty())
    throw ConfigError("grid.n or grid.n_list is required", "grid.n_list", 0);
  if (cfg.relax.empty())
    throw ConfigError("relax.value or relax.list is required", "relax.list", 0);
  if (opt.quick && rows.size() > 2) rows.resize(2);

  std::vector<std::string> data = cfg.datum_list;
  if (data.empty()) data = {cfg.datum_name};

  EqdistSummary summary;
  for (const std::string& name : data)
    for (std::int64_t n : rows)
      for (const RelaxChoice& choice : cfg.relax) {
        EqdistCase c;
        c.datum = name;
        c.n = n;
        c.relax = choice;
        summary.cases.push_back(c);
      }

  parallel_for(static_cast<std::int64_t>(summary.cases.size()), opt.threads,
               [&](std::int64_t i) {
                 EqdistCase& c = summary.cases[i];
                 const GridSpec grid = target_grid(cfg, c.n);
                 RunOptions options;
                 options.T = cfg.T;
                 options.cadence = 1;
                 options.subsamples = cfg.average_subsamples;
                 c.report = run(cfg.scheme, cfg.flux,
                                datum_with_bound(cfg, c.datum), grid,
                                c.relax.pair, options);
                 c.plateau_value = plateau(c.report.eq_dist);
                 c.decay_factor =
                     fitted_decay_factor(c.report.steps, c.report.eq_dist);
               });

  if (opt.write) {
    const std::string dir = effective_out_dir(cfg, opt);
    write_manifest(cfg, opt);
    for (const EqdistCase& c : summary.cases) {
      const std::string name = "eqdist_" + sanitize(c.datum) + "_n" +
                               std::to_string(c.n) + "_" +
                               sanitize(c.relax.label) + ".csv";
      CsvWriter csv(join_path(dir, name), {"step", "t", "eq_dist"});
      for (std::size_t i = 0; i < c.report.steps.size(); ++i)
        csv.row({static_cast<double>(c.report.steps[i]), c.report.times[i],
                 c.report.eq_dist[i]});
    }
    CsvWriter csv(join_path(dir, "eqdist_summary.csv"),
                  {"datum", "n", "label", "omega_s", "omega_a", "plateau",
                   "decay_factor"});
    for (const EqdistCase& c : summary.cases)
      csv.row(std::vector<std::string>{
          c.datum, std::to_string(c.n), c.relax.label,
          format_number(c.relax.pair.omega_s),
          format_number(c.relax.pair.omega_a), format_number(c.plateau_value),
          format_number(c.decay_factor)});
  }
  return summary;
}

MaxPrincipleReport run_maxprinciple(const ExperimentConfig& cfg,
                                    const DriverOptions& opt) {
  if (cfg.scan_line.empty())
    throw ConfigError("relax.line (with relax.from/to/step) is required",
                      "relax.line", 0);
  if (cfg.n < 1)
    throw ConfigError("grid.n is required for a parameter scan", "grid.n", 0);
  if (!(cfg.T > 0.0))
    throw ConfigError("run.T must be positive for a parameter scan", "run.T", 0);

  const double step = opt.quick ? std::max(cfg.scan_step, 0.05) : cfg.scan_step;
  std::vector<double> values;
  for (std::int64_t i = 0;; ++i) {
    const double w = cfg.scan_from + static_cast<double>(i) * step;
    if (w > cfg.scan_to + 1e-12) break;
    values.push_back(w);
  }

  MaxPrincipleReport report;
  report.line = cfg.scan_line;
  report.rows.resize(values.size());
  const GridSpec grid = target_grid(cfg, cfg.n);
  const InitialDatum datum = datum_with_bound(cfg, cfg.datum_name);

  parallel_for(static_cast<std::int64_t>(values.size()), opt.threads,
               [&](std::int64_t i) {
                 const double w = values[i];
                 const RelaxPair pair = cfg.scan_line == "bgk"
                                            ? make_bgk(w)
                                            : make_magic_pair(w);
                 RunOptions options;
                 options.T = cfg.T;
                 options.cadence = 1;
                 options.subsamples = cfg.average_subsamples;
                 const RunReport r =
                     run(cfg.scheme, cfg.flux, datum, grid, pair, options);
                 MaxPrincipleRow& row = report.rows[i];
                 row.omega_a = w;
                 row.blew_up = r.blew_up;
                 double hi = -std::numeric_limits<double>::infinity();
                 double lo = std::numeric_limits<double>::infinity();
                 for (double v : r.sup_u) hi = std::max(hi, v);
                 for (double v : r.inf_u) lo = std::min(lo, v);
                 row.max_u = hi;
                 row.min_u = lo;
               });

  if (opt.write) {
    const std::string dir = effective_out_dir(cfg, opt);
    write_manifest(cfg, opt);
    CsvWriter csv(join_path(dir, "maxprinciple.csv"),
                  {"omega_a", "max_u", "min_u", "blowup"});
    for (const MaxPrincipleRow& row : report.rows)
      csv.row({row.omega_a, row.max_u, row.min_u, row.blew_up ? 1.0 : 0.0});
  }
  return report;
}

}  // namespace trtlb
