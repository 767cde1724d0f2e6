// Config-driven experiment drivers behind the command line verbs.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trtlb/config.hpp"
#include "trtlb/diagnostics.hpp"
#include "trtlb/monotonicity.hpp"
#include "trtlb/reference.hpp"

namespace trtlb {

struct DriverOptions {
  std::string out_dir;        // overrides output.dir when nonempty
  int threads = 1;
  bool quick = false;         // reduced ladders, scan steps and resolutions
  int oracle_refine = 0;      // overrides run.oracle_refine when positive
  bool write = true;          // emit files (drivers always return results)
};

// Godunov solutions shared across drivers, keyed by datum/grid/refinement.
class OracleCache {
 public:
  // Solution projected onto the n-cell target grid at every scheme step time
  // (subject to store_stride).
  std::shared_ptr<const OracleSolution> projected(
      const ExperimentConfig& cfg, std::int64_t n, int refine,
      std::int64_t store_stride);

 private:
  std::map<std::string, std::shared_ptr<const OracleSolution>> entries_;
};

struct CheckReport {
  std::vector<SchemeViolation> violations;  // empty for a valid scheme
  MonotonicityProblem problem;
  std::vector<MonotonicityVerdict> verdicts;  // one per configured relax value
  DiagonalBound bgk;
  MagicBound magic;
};
CheckReport run_check(const ExperimentConfig& cfg, const DriverOptions& opt);

struct SingleRunOutputs {
  RunReport report;
};
SingleRunOutputs run_single(const ExperimentConfig& cfg, const DriverOptions& opt,
                            OracleCache* cache = nullptr);

struct ConvergenceTable {
  std::vector<std::string> labels;          // one per relax setting
  std::vector<RelaxPair> relax;
  std::vector<double> dx;                   // one per ladder row
  std::vector<std::int64_t> n;
  // errors[row][setting]; blowups flag non-finite runs.
  std::vector<std::vector<double>> errors;
  std::vector<std::vector<std::uint8_t>> blowups;
  // orders[row-1][setting] = log2(errors[row-1]/errors[row]).
  std::vector<std::vector<double>> orders;
};
ConvergenceTable run_convergence(const ExperimentConfig& cfg,
                                 const DriverOptions& opt,
                                 OracleCache* cache = nullptr);

struct RegionOutputs {
  MonotonicityProblem problem;
  RegionRaster raster;
  StructuralReport structural;
  DiagonalBound bgk;
  MagicBound magic;
};
RegionOutputs run_region(const ExperimentConfig& cfg, const DriverOptions& opt);

struct EqdistCase {
  std::string datum;
  std::int64_t n = 0;
  RelaxChoice relax;
  RunReport report;
  double plateau_value = 0.0;
  double decay_factor = 0.0;  // fitted per-step factor, NaN when not fittable
};
struct EqdistSummary {
  std::vector<EqdistCase> cases;
};
EqdistSummary run_eqdist(const ExperimentConfig& cfg, const DriverOptions& opt);

struct MaxPrincipleRow {
  double omega_a = 0.0;   // scanned parameter (equal to omega_s on the bgk line)
  double max_u = 0.0;
  double min_u = 0.0;
  bool blew_up = false;
};
struct MaxPrincipleReport {
  std::string line;  // "bgk" or "magic"
  std::vector<MaxPrincipleRow> rows;
};
MaxPrincipleReport run_maxprinciple(const ExperimentConfig& cfg,
                                    const DriverOptions& opt);

}  // namespace trtlb
