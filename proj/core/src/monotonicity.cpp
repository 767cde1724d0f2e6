#include "trtlb/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trtlb/parallel.hpp"

namespace trtlb {

MonotonicityProblem make_problem(const SchemeSpec& spec, const FluxModel& flux,
                                 double m, int samples) {
  MonotonicityProblem problem;
  problem.eps_zero = spec.eps_zero;
  problem.eps_link = spec.eps_link;
  problem.g_link = equilibrium_derivative_bounds(spec, flux, m, samples);
  return problem;
}

MonotonicityVerdict is_monotone(const MonotonicityProblem& problem,
                                const RelaxPair& relax, double tol) {
  const double ws = relax.omega_s;
  const double wa = relax.omega_a;
  if (!(ws > 0.0) || !(wa > 0.0) || ws > 2.0 || wa > 2.0)
    throw std::domain_error("relaxation parameters must lie in (0, 2]");

  MonotonicityVerdict verdict;
  verdict.margin_zero = ws * problem.eps_zero - std::max(0.0, ws - 1.0);
  verdict.inside = verdict.margin_zero >= -tol;

  const double off_diagonal_slack =
      0.5 * std::min(2.0 - ws - wa, std::min(0.0, wa - ws));
  verdict.margin_link.resize(problem.eps_link.size());
  for (std::size_t l = 0; l < problem.eps_link.size(); ++l) {
    verdict.margin_link[l] =
        ws * problem.eps_link[l] + off_diagonal_slack - wa * problem.g_link[l];
    verdict.inside = verdict.inside && verdict.margin_link[l] >= -tol;
  }
  return verdict;
}

namespace {

bool equilibria_monotone(const MonotonicityProblem& problem) {
  if (problem.eps_zero < 0.0) return false;
  for (std::size_t l = 0; l < problem.eps_link.size(); ++l) {
    if (problem.eps_link[l] < 0.0) return false;
    if (problem.g_link[l] > problem.eps_link[l]) return false;
  }
  return true;
}

}  // namespace

DiagonalBound bgk_upper_bound(const MonotonicityProblem& problem) {
  DiagonalBound bound;
  if (!equilibria_monotone(problem)) {
    bound.empty = true;
    return bound;
  }
  double omega = std::numeric_limits<double>::infinity();
  if (problem.eps_zero < 1.0) omega = 1.0 / (1.0 - problem.eps_zero);
  for (std::size_t l = 0; l < problem.eps_link.size(); ++l) {
    const double denom = 1.0 - problem.eps_link[l] + problem.g_link[l];
    if (denom > 0.0) omega = std::min(omega, 1.0 / denom);
  }
  bound.omega_max = std::min(omega, 2.0);
  return bound;
}

MagicBound magic_max_omega_a(const MonotonicityProblem& problem) {
  MagicBound bound;
  if (!equilibria_monotone(problem)) {
    bound.empty = true;
    return bound;
  }
  double sup = 2.0;
  for (std::size_t l = 0; l < problem.eps_link.size(); ++l) {
    const double denom = problem.g_link[l] + problem.eps_link[l];
    if (denom > 0.0)
      sup = std::min(sup, 2.0 * problem.eps_link[l] / denom);
  }
  bound.sup = sup;
  bound.attained = sup < 2.0;
  return bound;
}

RegionRaster rasterize(const MonotonicityProblem& problem, int resolution,
                       int threads) {
  if (resolution < 1) throw std::invalid_argument("raster resolution must be positive");
  RegionRaster raster;
  raster.resolution = resolution;
  raster.inside.assign(static_cast<std::int64_t>(resolution) * resolution, 0);
  const double cell = 2.0 / resolution;
  parallel_for(resolution, threads, [&](std::int64_t j) {
    const double wa = (static_cast<double>(j) + 0.5) * cell;
    for (int i = 0; i < resolution; ++i) {
      const double ws = (static_cast<double>(i) + 0.5) * cell;
      const MonotonicityVerdict v = is_monotone(problem, {ws, wa});
      raster.inside[i + static_cast<std::int64_t>(resolution) * j] =
          v.inside ? 1 : 0;
    }
  });
  return raster;
}

namespace {

// True when the inside cells met along a scan form one contiguous run.
class RunScanner {
 public:
  void feed(bool inside) {
    if (inside) {
      if (runs_ == 0) runs_ = 1;
      if (gap_after_run_) runs_ = 2;
    } else if (runs_ == 1) {
      gap_after_run_ = true;
    }
  }
  bool contiguous() const { return runs_ <= 1; }
  void reset() {
    runs_ = 0;
    gap_after_run_ = false;
  }

 private:
  int runs_ = 0;
  bool gap_after_run_ = false;
};

}  // namespace

StructuralReport structural_checks(const RegionRaster& raster) {
  const int res = raster.resolution;
  StructuralReport report;

  for (std::uint8_t v : raster.inside) report.inside_count += v;

  // Contiguity along rows, columns and both 45-degree directions; every slice
  // of a convex region sampled on a straight line is a single interval.
  bool convex = true;
  RunScanner scan;
  for (int j = 0; j < res && convex; ++j) {
    scan.reset();
    for (int i = 0; i < res; ++i) scan.feed(raster.at(i, j));
    convex = scan.contiguous();
  }
  for (int i = 0; i < res && convex; ++i) {
    scan.reset();
    for (int j = 0; j < res; ++j) scan.feed(raster.at(i, j));
    convex = scan.contiguous();
  }
  // Diagonals i - j = const (direction (+1,+1)).
  for (int start = -(res - 1); start < res && convex; ++start) {
    scan.reset();
    for (int j = std::max(0, -start); j < res; ++j) {
      const int i = j + start;
      if (i < 0 || i >= res) break;
      scan.feed(raster.at(i, j));
    }
    convex = scan.contiguous();
  }
  // Antidiagonals i + j = const (direction (+1,-1)).
  for (int total = 0; total <= 2 * (res - 1) && convex; ++total) {
    scan.reset();
    for (int i = std::max(0, total - (res - 1)); i <= std::min(res - 1, total);
         ++i)
      scan.feed(raster.at(i, total - i));
    convex = scan.contiguous();
  }
  report.convexity_ok = convex;

  bool clear = true;
  for (int i = 0; i < res; ++i) {
    if (raster.at(i, res - 1) || raster.at(res - 1, i)) clear = false;
  }
  report.no_omega_two_ok = clear;

  for (int i = 0; i < res; ++i)
    if (raster.at(i, i)) report.diagonal_last_inside = i;

  bool any_above = false;
  for (int j = 0; j < res && !any_above; ++j)
    for (int i = 0; i < j; ++i)
      if (raster.at(i, j)) {
        any_above = true;
        break;
      }

  // Interiority of the diagonal where the raster can resolve it: skip the
  // cell next to the diagonal cutoff and cells where the region is thinner
  // than three cells above or below the diagonal in that column (near the
  // origin the region is a shrinking cone around the diagonal, so a fixed
  // number of cells there can never have a fully inside neighbourhood).
  bool interior = true;
  if (any_above) {
    const std::int64_t last = report.diagonal_last_inside;
    for (int i = 3; i <= static_cast<int>(last) - 2 && i + 3 < res; ++i) {
      if (!raster.at(i, i)) continue;
      if (!raster.at(i, i + 3) || !raster.at(i, i - 3)) continue;
      bool all = true;
      for (int di = -1; di <= 1 && all; ++di)
        for (int dj = -1; dj <= 1 && all; ++dj) {
          if (di == 0 && dj == 0) continue;
          all = raster.at(i + di, i + dj);
        }
      if (!all) {
        interior = false;
        break;
      }
      report.diagonal_checked += 1;
    }
  }
  report.diagonal_interior_ok = interior;
  return report;
}

}  // namespace trtlb
