#include "trtlb/flux.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace trtlb {

FluxModel make_burgers_flux() {
  FluxModel flux;
  flux.d = 1;
  flux.components = {[](double u) { return 0.5 * u * u; }};
  flux.derivatives = {[](double u) { return u; }};
  flux.name = "burgers";
  return flux;
}

FluxModel make_rotated_burgers_flux(double theta) {
  FluxModel flux;
  flux.d = 2;
  const double cx = std::cos(theta);
  const double cy = std::sin(theta);
  flux.components = {[cx](double u) { return cx * 0.5 * u * u; },
                     [cy](double u) { return cy * 0.5 * u * u; }};
  flux.derivatives = {[cx](double u) { return cx * u; },
                      [cy](double u) { return cy * u; }};
  flux.name = "rotated-burgers";
  return flux;
}

FluxModel make_advection_flux(const std::vector<double>& speed) {
  if (speed.empty()) throw std::invalid_argument("advection flux needs a speed");
  FluxModel flux;
  flux.d = static_cast<int>(speed.size());
  for (double a : speed) {
    flux.components.push_back([a](double u) { return a * u; });
    flux.derivatives.push_back([a](double) { return a; });
  }
  flux.name = "advection";
  return flux;
}

double flux_origin_residual(const FluxModel& flux) {
  double worst = 0.0;
  for (int a = 0; a < flux.d; ++a) worst = std::max(worst, std::fabs(flux.eval(a, 0.0)));
  return worst;
}

double flux_derivative_residual(const FluxModel& flux, double lo, double hi,
                                int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pick(lo, hi);
  const double h = 1e-6 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double u = pick(rng);
    for (int a = 0; a < flux.d; ++a) {
      const double fd = (flux.eval(a, u + h) - flux.eval(a, u - h)) / (2.0 * h);
      const double ex = flux.deriv(a, u);
      const double scale = std::max(1.0, std::fabs(ex));
      worst = std::max(worst, std::fabs(fd - ex) / scale);
    }
  }
  return worst;
}

double flux_max_wave_speed(const FluxModel& flux, double lo, double hi,
                           int samples) {
  if (hi < lo) std::swap(lo, hi);
  samples = std::max(samples, 2);
  double worst = 0.0;
  auto probe = [&](double u) {
    for (int a = 0; a < flux.d; ++a)
      worst = std::max(worst, std::fabs(flux.deriv(a, u)));
  };
  for (int i = 0; i < samples; ++i) {
    const double s = static_cast<double>(i) / (samples - 1);
    probe(lo + s * (hi - lo));
  }
  if (lo < 0.0 && 0.0 < hi) probe(0.0);
  return worst;
}

}  // namespace trtlb
