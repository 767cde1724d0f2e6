// Grid norms, variation measures and run reports.
#pragma once

#include <cstdint>
#include <vector>

#include "trtlb/flux.hpp"
#include "trtlb/grid.hpp"
#include "trtlb/scheme.hpp"
#include "trtlb/state.hpp"

namespace trtlb {

// dx^d sum_j |v_j| for a scalar field, and the same summed over components
// for a distribution field.
double l1_norm(const std::vector<double>& field, const GridSpec& grid);
double l1_norm_components(const LatticeState& state, const GridSpec& grid);

// dx^{d-1} sum_j sum_alpha |v_{j+e_alpha} - v_j| with periodic wrap.
double total_variation(const std::vector<double>& field, const GridSpec& grid);

// Sum of the per-component total variations of the distribution field.
double vector_total_variation(const LatticeState& state, const GridSpec& grid);

// L1 distance between the distribution field and the equilibrium of its own
// moment, dx^d sum_j sum_k |f_{k,j} - f_k^eq(u_j)|.
double equilibrium_distance(const LatticeState& state, const SchemeSpec& spec,
                            const FluxModel& flux, const GridSpec& grid);

// dx^d sum_j |a_j - b_j|; the fields must have equal size.
double l1_error(const std::vector<double>& a, const std::vector<double>& b,
                const GridSpec& grid);

// Observed orders log2(err_{i-1} / err_i) between consecutive ladder rows;
// entry i-1 corresponds to row i.  Non-positive errors yield NaN entries.
std::vector<double> convergence_order(const std::vector<double>& errors);

// Time series of one scheme run, sampled every `cadence` steps (step 0 and the
// final step are always recorded).
struct RunReport {
  std::vector<std::int64_t> steps;
  std::vector<double> times;
  std::vector<double> sup_u, inf_u;
  std::vector<double> tv_u, tv_vec, eq_dist;
  std::vector<double> l1_err;        // empty when no reference was supplied
  double linf_l1_err = 0.0;          // max of l1_err over recorded steps
  bool blew_up = false;
  std::int64_t blowup_step = -1;
  std::int64_t total_steps = 0;
  double final_time = 0.0;
  std::vector<double> final_u;       // moment at the last completed step
  std::vector<double> final_f;       // distributions at the last completed step
};

// Mean of the final quarter of the recorded values (at least one value).
double plateau(const std::vector<double>& series);

// Least-squares slope of log(plateau - series) against the step axis over the
// pre-plateau window (residuals above `floor` times the plateau); returns the
// fitted per-step decay factor exp(slope), or NaN when fewer than `min_points`
// usable points exist.
double fitted_decay_factor(const std::vector<std::int64_t>& steps,
                           const std::vector<double>& series, double floor = 0.02,
                           int min_points = 6);

}  // namespace trtlb
