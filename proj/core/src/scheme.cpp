#include "trtlb/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trtlb {

RelaxPair make_bgk(double omega) { return {omega, omega}; }

RelaxPair make_magic_pair(double omega_a) { return {2.0 - omega_a, omega_a}; }

std::vector<SchemeViolation> validate(const SchemeSpec& spec, double tol) {
  std::vector<SchemeViolation> out;
  auto flag = [&](const std::string& what, double residual) {
    out.push_back({what, residual});
  };

  if (spec.d < 1) flag("dimension must be at least 1", spec.d);
  if (spec.L < 1) flag("at least one velocity link is required", spec.L);
  if (!(spec.lambda > 0.0)) flag("lattice speed must be positive", spec.lambda);
  if (static_cast<int>(spec.velocities.size()) != spec.L)
    flag("one velocity per link is required", spec.velocities.size());
  if (static_cast<int>(spec.eps_link.size()) != spec.L)
    flag("one eps per link is required", spec.eps_link.size());
  if (static_cast<int>(spec.sigma_link.size()) != spec.L)
    flag("one sigma row per link is required", spec.sigma_link.size());
  if (!out.empty()) return out;

  for (int l = 0; l < spec.L; ++l) {
    if (static_cast<int>(spec.velocities[l].size()) != spec.d)
      flag("velocity of link " + std::to_string(l) + " has wrong dimension",
           spec.velocities[l].size());
    if (static_cast<int>(spec.sigma_link[l].size()) != spec.d)
      flag("sigma of link " + std::to_string(l) + " has wrong dimension",
           spec.sigma_link[l].size());
  }
  if (!out.empty()) return out;

  for (int l = 0; l < spec.L; ++l) {
    double norm = 0.0;
    for (int a = 0; a < spec.d; ++a) {
      const double shift = spec.velocities[l][a] / spec.lambda;
      const double res = std::fabs(shift - std::round(shift));
      if (res > tol)
        flag("velocity of link " + std::to_string(l) +
                 " is not a lattice multiple along axis " + std::to_string(a),
             res);
      norm += spec.velocities[l][a] * spec.velocities[l][a];
    }
    if (norm <= tol)
      flag("velocity of link " + std::to_string(l) + " vanishes", norm);
    for (int a = 0; a < spec.d; ++a) {
      if (spec.sigma_link[l][a] < -tol)
        flag("sigma of link " + std::to_string(l) + " axis " + std::to_string(a) +
                 " must be nonnegative",
             spec.sigma_link[l][a]);
    }
  }

  // Moment consistency: the eps sum carries the mass, the velocity-weighted
  // sigma sums carry the flux, one axis each.
  double eps_sum = spec.eps_zero;
  for (int l = 0; l < spec.L; ++l) eps_sum += 2.0 * spec.eps_link[l];
  if (std::fabs(eps_sum - 1.0) > tol)
    flag("eps coefficients must sum to 1", std::fabs(eps_sum - 1.0));

  for (int a = 0; a < spec.d; ++a) {
    for (int p = 0; p < spec.d; ++p) {
      double s = 0.0;
      for (int l = 0; l < spec.L; ++l)
        s += 2.0 * spec.velocities[l][a] * spec.sigma_link[l][p];
      const double want = (a == p) ? 1.0 : 0.0;
      if (std::fabs(s - want) > tol)
        flag("velocity-weighted sigma sum (" + std::to_string(a) + "," +
                 std::to_string(p) + ") must equal " + (a == p ? "1" : "0"),
             std::fabs(s - want));
    }
  }
  return out;
}

void equilibrium(const SchemeSpec& spec, const FluxModel& flux, double u,
                 double* out) {
  out[0] = spec.eps_zero * u;
  for (int l = 0; l < spec.L; ++l) {
    const double su = spec.eps_link[l] * u;
    double a = 0.0;
    for (int alpha = 0; alpha < spec.d; ++alpha)
      a += spec.sigma_link[l][alpha] * flux.eval(alpha, u);
    out[spec.plus(l)] = su + a;
    out[spec.minus(l)] = su - a;
  }
}

std::vector<double> equilibrium_derivative_bounds(const SchemeSpec& spec,
                                                  const FluxModel& flux, double m,
                                                  int samples) {
  if (m < 0.0) throw std::invalid_argument("data bound must be nonnegative");
  samples = std::max(samples, 2);
  std::vector<double> g(spec.L, 0.0);
  auto probe = [&](double u) {
    for (int l = 0; l < spec.L; ++l) {
      double s = 0.0;
      for (int alpha = 0; alpha < spec.d; ++alpha)
        s += spec.sigma_link[l][alpha] * flux.deriv(alpha, u);
      g[l] = std::max(g[l], std::fabs(s));
    }
  };
  if (m == 0.0) {
    probe(0.0);
    return g;
  }
  for (int i = 0; i < samples; ++i) {
    const double s = static_cast<double>(i) / (samples - 1);
    probe(-m + s * 2.0 * m);
  }
  probe(0.0);
  return g;
}

SchemeSpec make_d1q3(double eps2, double lambda) {
  SchemeSpec spec;
  spec.d = 1;
  spec.L = 1;
  spec.lambda = lambda;
  spec.velocities = {{lambda}};
  spec.eps_link = {eps2};
  spec.eps_zero = 1.0 - 2.0 * eps2;
  spec.sigma_link = {{1.0 / (2.0 * lambda)}};
  spec.name = "d1q3";
  return spec;
}

SchemeSpec make_d2q5(double eps2, double eps4, double lambda) {
  SchemeSpec spec;
  spec.d = 2;
  spec.L = 2;
  spec.lambda = lambda;
  spec.velocities = {{lambda, 0.0}, {0.0, lambda}};
  spec.eps_link = {eps2, eps4};
  spec.eps_zero = 1.0 - 2.0 * (eps2 + eps4);
  spec.sigma_link = {{1.0 / (2.0 * lambda), 0.0}, {0.0, 1.0 / (2.0 * lambda)}};
  spec.name = "d2q5";
  return spec;
}

}  // namespace trtlb
