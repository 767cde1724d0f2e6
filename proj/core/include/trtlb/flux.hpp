// Scalar conservation-law flux phi : R -> R^d with exact derivatives.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace trtlb {

using ScalarFn = std::function<double(double)>;

struct FluxModel {
  int d = 0;
  std::vector<ScalarFn> components;   // phi_alpha, size d
  std::vector<ScalarFn> derivatives;  // phi_alpha', size d
  std::string name;

  double eval(int alpha, double u) const { return components[alpha](u); }
  double deriv(int alpha, double u) const { return derivatives[alpha](u); }
};

// phi(u) = u^2/2 in one dimension.
FluxModel make_burgers_flux();

// phi(u) = (cos(theta), sin(theta)) u^2/2 in two dimensions.
FluxModel make_rotated_burgers_flux(double theta);

// phi_alpha(u) = speed_alpha * u.
FluxModel make_advection_flux(const std::vector<double>& speed);

// Largest |phi_alpha(0)| over components; a flux model is normalized when this is 0.
double flux_origin_residual(const FluxModel& flux);

// Largest relative mismatch between derivatives and central differences of the
// components at `trials` random points of [lo, hi].
double flux_derivative_residual(const FluxModel& flux, double lo, double hi,
                                int trials, std::uint64_t seed);

// max over alpha and u in [lo, hi] of |phi_alpha'(u)|, by dense sampling
// (samples include both endpoints and 0 when it lies inside).
double flux_max_wave_speed(const FluxModel& flux, double lo, double hi,
                           int samples = 1001);

}  // namespace trtlb
