// Exact monotonicity region of the relaxation-parameter plane.
//
// For data confined to [-m, m] the update is order preserving exactly when
// every entry of the collision Jacobian is nonnegative there.  With
// G_l = max |sum_alpha sigma_{l,alpha} phi_alpha'| on [-m, m] the entries
// reduce to the closed conditions
//   omega_s eps_zero >= max(0, omega_s - 1)                        (rest part)
//   omega_a G_l <= omega_s eps_l
//                  + min(2 - omega_s - omega_a, 0, omega_a - omega_s) / 2
// per link; boundary points satisfy them with margin 0 and count as inside.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trtlb/flux.hpp"
#include "trtlb/scheme.hpp"

namespace trtlb {

struct MonotonicityProblem {
  double eps_zero = 0.0;
  std::vector<double> eps_link;  // size L
  std::vector<double> g_link;    // size L, G_l >= 0
};

// Bundles the scheme's equilibrium coefficients with the derivative bounds of
// the flux on [-m, m].
MonotonicityProblem make_problem(const SchemeSpec& spec, const FluxModel& flux,
                                 double m, int samples = 100001);

struct MonotonicityVerdict {
  bool inside = false;
  double margin_zero = 0.0;           // rest-part slack, >= 0 inside
  std::vector<double> margin_link;    // per-link slack, >= 0 inside
};

// Membership of (omega_s, omega_a).  Throws std::domain_error outside (0,2]^2.
// Comparisons carry an absolute slack `tol` so that named boundary points
// evaluate as inside in floating point.
MonotonicityVerdict is_monotone(const MonotonicityProblem& problem,
                                const RelaxPair& relax, double tol = 1e-14);

struct DiagonalBound {
  bool empty = false;      // true when no diagonal point is admissible
  double omega_max = 0.0;  // the region on omega_s = omega_a is (0, omega_max]
};

// Largest admissible parameter on the diagonal:
//   min( 1/(1 - eps_zero), min_l 1/(1 - eps_l + G_l) ),
// with 1/(1 - eps_zero) read as +inf when eps_zero = 1.  The region is empty
// exactly when some coefficient fails eps >= 0 or G_l <= eps_l.
DiagonalBound bgk_upper_bound(const MonotonicityProblem& problem);

struct MagicBound {
  bool empty = false;
  double sup = 0.0;        // supremum of omega_a on omega_s + omega_a = 2
  bool attained = false;   // false only for the open end at omega_a = 2
};

// Largest omega_a on the line omega_s = 2 - omega_a:
//   min( min_l 2 eps_l / (G_l + eps_l), 2 ),
// open (unattained) exactly when the minimum is the domain cap 2 itself.
MagicBound magic_max_omega_a(const MonotonicityProblem& problem);

// Membership flags sampled at cell centers of an axis-aligned raster of
// (0,2]^2: cell (i,j) holds the verdict at ((i+1/2) 2/res, (j+1/2) 2/res).
struct RegionRaster {
  int resolution = 0;
  std::vector<std::uint8_t> inside;  // resolution^2, omega_s index fastest
  bool at(int i, int j) const { return inside[i + static_cast<std::int64_t>(resolution) * j] != 0; }
};

RegionRaster rasterize(const MonotonicityProblem& problem, int resolution,
                       int threads = 1);

// Raster-level consistency checks of the region geometry.
struct StructuralReport {
  // Along every row, column and 45-degree diagonal of the raster, inside
  // cells form one contiguous run.
  bool convexity_ok = false;
  // No inside cell in the outermost row or column (the cells reaching
  // omega = 2).
  bool no_omega_two_ok = false;
  // Where the raster shows the region at least three cells thick above and
  // below the diagonal (and one cell clear of the diagonal bound's end),
  // diagonal cells have all eight neighbours inside.  Vacuously true when no
  // cell lies strictly above the diagonal.
  bool diagonal_interior_ok = false;
  std::int64_t inside_count = 0;
  std::int64_t diagonal_checked = 0;  // cells the interiority scan covered
  // Index of the last inside diagonal cell, -1 when none.
  std::int64_t diagonal_last_inside = -1;
};

StructuralReport structural_checks(const RegionRaster& raster);

}  // namespace trtlb
