// Velocity set and equilibrium coefficients of the two-relaxation-times scheme.
//
// Components are indexed 0..q-1 with q = 1 + 2L: component 0 carries the zero
// velocity, link l in 0..L-1 owns the pair (1+2l, 2+2l) with velocities
// +c_l and -c_l.  Equilibria are affine in the flux,
//   f_k^eq(u) = eps_k u + sum_alpha sigma_{k,alpha} phi_alpha(u),
// with eps and sigma shared (eps) and negated (sigma) across each pair.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trtlb/flux.hpp"

namespace trtlb {

struct SchemeSpec {
  int d = 0;                                    // spatial dimension
  int L = 0;                                    // number of velocity links
  double lambda = 0.0;                          // lattice speed, dt = dx/lambda
  std::vector<std::vector<double>> velocities;  // c_l of the + member, L x d
  double eps_zero = 0.0;                        // eps_1 in 1-based notation
  std::vector<double> eps_link;                 // eps of each link, size L
  std::vector<std::vector<double>> sigma_link;  // sigma of the + member, L x d, >= 0
  std::string name;

  int q() const { return 1 + 2 * L; }
  int plus(int l) const { return 1 + 2 * l; }
  int minus(int l) const { return 2 + 2 * l; }

  double eps(int k) const { return k == 0 ? eps_zero : eps_link[(k - 1) / 2]; }
  double sigma(int k, int alpha) const {
    if (k == 0) return 0.0;
    const double s = sigma_link[(k - 1) / 2][alpha];
    return (k % 2 == 1) ? s : -s;
  }
};

// Relaxation parameters of the symmetric and antisymmetric link parts.  The
// monotonicity analysis lives on (0,2]^2; omega_s = 0 is additionally accepted
// by the kernel so the degenerate end of the magic line (omega_a = 2) can run.
struct RelaxPair {
  double omega_s = 0.0;
  double omega_a = 0.0;
};

RelaxPair make_bgk(double omega);            // omega_s = omega_a = omega
RelaxPair make_magic_pair(double omega_a);   // omega_s = 2 - omega_a

// One named violation of the scheme constraints, with the offending residual.
struct SchemeViolation {
  std::string what;
  double residual = 0.0;
};

// Checks consistency (sum of eps equals 1, velocity-weighted sigma sums equal
// 1/2 per axis), sign constraints (sigma >= 0, lambda > 0), velocity-grid
// compatibility (c_l / lambda integer), and shape coherence.  Empty when valid.
std::vector<SchemeViolation> validate(const SchemeSpec& spec, double tol = 1e-12);

// Writes f^eq(u) into out[0..q-1].
void equilibrium(const SchemeSpec& spec, const FluxModel& flux, double u,
                 double* out);

// Per-link bound G_l = max over u in [-m, m] of |sum_alpha sigma_{l,alpha}
// phi_alpha'(u)|, by dense sampling; the sample set always contains both
// endpoints and 0.
std::vector<double> equilibrium_derivative_bounds(const SchemeSpec& spec,
                                                  const FluxModel& flux, double m,
                                                  int samples = 100001);

// Named instances.  D1Q3: d=1, lambda, c = (lambda,), sigma = 1/(2 lambda).
// D2Q5: d=2, c_x = (lambda, 0), c_y = (0, lambda), sigma_x = (1/(2 lambda), 0),
// sigma_y = (0, 1/(2 lambda)).
SchemeSpec make_d1q3(double eps2, double lambda = 2.0);
SchemeSpec make_d2q5(double eps2, double eps4, double lambda = 2.0);

}  // namespace trtlb
