// Reference solvers: a fine-grid Godunov oracle and the two-step finite
// difference form taken by the scheme on the line omega_s + omega_a = 2.
#pragma once

#include <cstdint>
#include <vector>

#include "trtlb/datum.hpp"
#include "trtlb/flux.hpp"
#include "trtlb/grid.hpp"
#include "trtlb/scheme.hpp"

namespace trtlb {

struct GodunovOptions {
  // When positive, the oracle step divides this interval exactly
  // (dt = align_dt / k with the smallest k keeping CFL <= cfl_limit) and
  // snapshots land on multiples of align_dt; otherwise dt is chosen from the
  // CFL limit directly and snapshots land on every stored step.
  double align_dt = 0.0;
  // Keep every store_stride-th aligned snapshot (the final time is always
  // kept).
  std::int64_t store_stride = 1;
  double cfl_limit = 0.45;
  // When set, snapshots are block-averaged onto this grid as they are taken;
  // the solution then answers project() for that grid only.
  const GridSpec* project_target = nullptr;
};

struct OracleSolution {
  GridSpec fine;                // grid the solver ran on
  GridSpec stored;              // grid of the stored snapshots
  double dt = 0.0;              // oracle step
  double cfl = 0.0;             // realized max |phi'| dt / dx
  std::vector<double> times;    // snapshot times, ascending, starting at 0
  std::vector<std::vector<double>> snapshots;  // cell averages on `stored`
};

// First-order Godunov solver with dimensional splitting and periodic
// boundaries.  The numerical flux minimizes (maximizes) phi over [a,b]
// ([b,a]); convex components use the closed sonic-point form, others dense
// sampling.  Throws std::runtime_error if the step violates the CFL limit.
OracleSolution godunov_solve(const FluxModel& flux, const InitialDatum& datum,
                             const GridSpec& fine, double T,
                             const GodunovOptions& options = {});

// Snapshot nearest to t (ties toward the earlier stamp).
const std::vector<double>& nearest_snapshot(const OracleSolution& oracle,
                                            double t);

// Block average of the snapshot nearest to t onto `target`, whose cell count
// must divide the stored grid's evenly per axis.
std::vector<double> project(const OracleSolution& oracle, const GridSpec& target,
                            double t);

// Block average of a single field between two compatible grids.
std::vector<double> block_average(const std::vector<double>& fine_field,
                                  const GridSpec& fine, const GridSpec& target);

// Two-step scalar recursion equivalent to the kernel when
// omega_s + omega_a = 2:
//   u^{n+1}_j = (2 - w) u^n_j + (w - 1) u^{n-1}_j
//             + (2 - w) sum_l [S_l(u^n_{j-e_l}) - 2 S_l(u^n_j) + S_l(u^n_{j+e_l})]
//             + w       sum_l [A_l(u^n_{j-e_l}) - A_l(u^n_{j+e_l})]
// with w = omega_a, S_l(u) = eps_l u, A_l(u) = sum_alpha sigma_{l,alpha}
// phi_alpha(u), and e_l = c_l / lambda.
struct MagicFDState {
  std::vector<double> prev;  // u^{n-1}
  std::vector<double> curr;  // u^n
};

void magic_fd_step(MagicFDState& state, const SchemeSpec& spec,
                   const FluxModel& flux, const GridSpec& grid, double omega_a);

}  // namespace trtlb
