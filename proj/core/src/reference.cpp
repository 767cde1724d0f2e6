#include "trtlb/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trtlb {

namespace {

struct AxisFlux {
  bool convex = false;
  double ustar = 0.0;     // argmin of phi on the data box (convex only)
  double phi_star = 0.0;  // phi(ustar)
  double lo = 0.0, hi = 0.0;
};

// Detects convexity of phi_alpha on [lo, hi] by sampling the derivative and,
// when convex, locates the sonic point by bisection on phi'.
AxisFlux analyze_axis(const FluxModel& flux, int alpha, double lo, double hi) {
  AxisFlux ax;
  ax.lo = lo;
  ax.hi = hi;
  if (!(hi > lo)) {  // degenerate data box: constant data
    ax.convex = true;
    ax.ustar = lo;
    ax.phi_star = flux.eval(alpha, lo);
    return ax;
  }
  const int samples = 2049;
  double prev = flux.deriv(alpha, lo);
  double scale = std::max(1.0, std::fabs(prev));
  bool nondecreasing = true;
  int sign_change = -1;
  for (int i = 1; i < samples; ++i) {
    const double u = lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
    const double der = flux.deriv(alpha, u);
    scale = std::max(scale, std::fabs(der));
    if (der < prev - 1e-12 * scale) nondecreasing = false;
    if (sign_change < 0 && prev < 0.0 && der >= 0.0) sign_change = i;
    prev = der;
  }
  ax.convex = nondecreasing;
  if (!ax.convex) return ax;

  if (flux.deriv(alpha, lo) >= 0.0) {
    ax.ustar = lo;
  } else if (flux.deriv(alpha, hi) <= 0.0) {
    ax.ustar = hi;
  } else {
    double a = lo + (hi - lo) * static_cast<double>(sign_change - 1) / (samples - 1);
    double b = lo + (hi - lo) * static_cast<double>(sign_change) / (samples - 1);
    for (int it = 0; it < 200 && b - a > 1e-16 * std::max(1.0, std::fabs(b));
         ++it) {
      const double mid = 0.5 * (a + b);
      if (flux.deriv(alpha, mid) < 0.0)
        a = mid;
      else
        b = mid;
    }
    ax.ustar = 0.5 * (a + b);
  }
  ax.phi_star = flux.eval(alpha, ax.ustar);
  return ax;
}

// Exact-minimizer face flux for the convex case, from cached phi values.
inline double face_flux_convex(const AxisFlux& ax, double ul, double ur,
                               double phil, double phir) {
  if (ul <= ur) {
    if (ax.ustar <= ul) return phil;
    if (ax.ustar >= ur) return phir;
    return ax.phi_star;
  }
  return std::max(phil, phir);
}

// Dense-sampling fallback for general fluxes.
double face_flux_sampled(const FluxModel& flux, int alpha, double ul, double ur) {
  const int samples = 129;
  const double a = std::min(ul, ur);
  const double b = std::max(ul, ur);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < samples; ++i) {
    const double u =
        a + (b - a) * static_cast<double>(i) / (samples - 1);
    const double v = flux.eval(alpha, u);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return ul <= ur ? lo : hi;
}

void sweep_axis(std::vector<double>& u, std::vector<double>& cache,
                std::vector<double>& face, const FluxModel& flux, int alpha,
                const AxisFlux& ax, const GridSpec& grid, double dt_over_dx) {
  const std::int64_t cells = grid.cells();
  const std::int64_t n = grid.n;
  std::int64_t stride = 1;
  for (int a = 0; a < alpha; ++a) stride *= n;
  const std::int64_t period = stride * n;

  for (std::int64_t i = 0; i < cells; ++i)
    cache[i] = flux.eval(alpha, u[i]);

  for (std::int64_t i = 0; i < cells; ++i) {
    const std::int64_t along = (i / stride) % n;
    const std::int64_t nb = (along + 1 < n) ? i + stride : i + stride - period;
    face[i] = ax.convex
                  ? face_flux_convex(ax, u[i], u[nb], cache[i], cache[nb])
                  : face_flux_sampled(flux, alpha, u[i], u[nb]);
  }

  for (std::int64_t i = 0; i < cells; ++i) {
    const std::int64_t along = (i / stride) % n;
    const std::int64_t pv = (along > 0) ? i - stride : i - stride + period;
    u[i] -= dt_over_dx * (face[i] - face[pv]);
  }
}

}  // namespace

OracleSolution godunov_solve(const FluxModel& flux, const InitialDatum& datum,
                             const GridSpec& fine, double T,
                             const GodunovOptions& options) {
  if (flux.d != fine.d)
    throw std::invalid_argument("flux and grid dimensions differ");
  if (options.store_stride < 1)
    throw std::invalid_argument("store stride must be positive");

  OracleSolution oracle;
  oracle.fine = fine;
  oracle.stored = options.project_target ? *options.project_target : fine;

  std::vector<double> u = cell_averages(datum, fine);
  double lo = u.empty() ? 0.0 : u[0], hi = lo;
  for (double v : u) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  std::vector<AxisFlux> axes(fine.d);
  for (int a = 0; a < fine.d; ++a) axes[a] = analyze_axis(flux, a, lo, hi);
  const double speed = flux_max_wave_speed(flux, lo, hi, 2049);

  // Step selection: either subdivide the alignment interval or span T evenly.
  std::int64_t outer = 0, inner = 1;
  if (options.align_dt > 0.0) {
    outer = std::max<std::int64_t>(
        0, static_cast<std::int64_t>(std::ceil(T / options.align_dt - 1e-9)));
    inner = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil(
               speed * options.align_dt / (options.cfl_limit * fine.dx) - 1e-12)));
    oracle.dt = options.align_dt / static_cast<double>(inner);
  } else {
    outer = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(
               std::ceil(T * speed / (options.cfl_limit * fine.dx) - 1e-12)));
    if (T <= 0.0) outer = 0;
    oracle.dt = outer > 0 ? T / static_cast<double>(outer) : 0.0;
  }
  oracle.cfl = speed * oracle.dt / fine.dx;
  if (oracle.cfl > options.cfl_limit * (1.0 + 1e-12))
    throw std::runtime_error("oracle step violates the CFL limit");

  const double stamp_dt =
      options.align_dt > 0.0 ? options.align_dt : oracle.dt;
  auto take = [&](std::int64_t stamp_index) {
    oracle.times.push_back(static_cast<double>(stamp_index) * stamp_dt);
    if (options.project_target)
      oracle.snapshots.push_back(block_average(u, fine, oracle.stored));
    else
      oracle.snapshots.push_back(u);
  };
  take(0);

  std::vector<double> cache(u.size()), face(u.size());
  const double dt_over_dx = fine.dx > 0.0 ? oracle.dt / fine.dx : 0.0;
  for (std::int64_t m = 1; m <= outer; ++m) {
    for (std::int64_t s = 0; s < inner; ++s) {
      for (int a = 0; a < fine.d; ++a)
        sweep_axis(u, cache, face, flux, a, axes[a], fine, dt_over_dx);
    }
    if (m % options.store_stride == 0 || m == outer) take(m);
  }
  return oracle;
}

namespace {

std::size_t nearest_index(const OracleSolution& oracle, double t) {
  if (oracle.times.empty()) throw std::invalid_argument("oracle holds no snapshots");
  const auto it =
      std::lower_bound(oracle.times.begin(), oracle.times.end(), t);
  if (it == oracle.times.begin()) return 0;
  if (it == oracle.times.end()) return oracle.times.size() - 1;
  const std::size_t hi = static_cast<std::size_t>(it - oracle.times.begin());
  const std::size_t lo = hi - 1;
  // Ties resolve toward the earlier stamp.
  return (t - oracle.times[lo] <= oracle.times[hi] - t) ? lo : hi;
}

}  // namespace

const std::vector<double>& nearest_snapshot(const OracleSolution& oracle,
                                            double t) {
  return oracle.snapshots[nearest_index(oracle, t)];
}

std::vector<double> project(const OracleSolution& oracle, const GridSpec& target,
                            double t) {
  const std::vector<double>& snap = nearest_snapshot(oracle, t);
  if (oracle.stored.n == target.n && oracle.stored.d == target.d) return snap;
  return block_average(snap, oracle.stored, target);
}

std::vector<double> block_average(const std::vector<double>& fine_field,
                                  const GridSpec& fine, const GridSpec& target) {
  if (fine.d != target.d)
    throw std::invalid_argument("grid dimensions differ");
  if (target.n < 1 || fine.n % target.n != 0)
    throw std::invalid_argument("target cells must evenly divide the fine cells");
  const std::int64_t r = fine.n / target.n;
  if (static_cast<std::int64_t>(fine_field.size()) != fine.cells())
    throw std::invalid_argument("field does not match the fine grid");

  std::vector<double> out(target.cells(), 0.0);
  std::vector<std::int64_t> coord(fine.d);
  for (std::int64_t i = 0; i < fine.cells(); ++i) {
    fine.unravel(i, coord.data());
    std::int64_t tidx = 0;
    for (int a = fine.d - 1; a >= 0; --a) tidx = tidx * target.n + coord[a] / r;
    out[tidx] += fine_field[i];
  }
  double blocks = 1.0;
  for (int a = 0; a < fine.d; ++a) blocks *= static_cast<double>(r);
  for (double& v : out) v /= blocks;
  return out;
}

void magic_fd_step(MagicFDState& state, const SchemeSpec& spec,
                   const FluxModel& flux, const GridSpec& grid, double omega_a) {
  const std::int64_t cells = grid.cells();
  if (static_cast<std::int64_t>(state.curr.size()) != cells ||
      static_cast<std::int64_t>(state.prev.size()) != cells)
    throw std::invalid_argument("state does not match the grid");
  const std::int64_t n = grid.n;
  const double w = omega_a;

  std::vector<std::int64_t> stride(grid.d);
  stride[0] = 1;
  for (int a = 1; a < grid.d; ++a) stride[a] = stride[a - 1] * n;

  // Per-link antisymmetric equilibrium A_l(u), cached over the grid.
  std::vector<std::vector<double>> alink(spec.L,
                                         std::vector<double>(cells, 0.0));
  std::vector<double> phi(spec.d);
  for (std::int64_t i = 0; i < cells; ++i) {
    for (int alpha = 0; alpha < spec.d; ++alpha)
      phi[alpha] = flux.eval(alpha, state.curr[i]);
    for (int l = 0; l < spec.L; ++l) {
      double a = 0.0;
      for (int alpha = 0; alpha < spec.d; ++alpha)
        a += spec.sigma_link[l][alpha] * phi[alpha];
      alink[l][i] = a;
    }
  }

  std::vector<double> next(cells);
  std::vector<std::int64_t> coord(grid.d);
  for (std::int64_t i = 0; i < cells; ++i) {
    grid.unravel(i, coord.data());
    double acc = (2.0 - w) * state.curr[i] + (w - 1.0) * state.prev[i];
    for (int l = 0; l < spec.L; ++l) {
      std::int64_t up = 0, dn = 0;
      for (int a = 0; a < grid.d; ++a) {
        const std::int64_t e =
            std::llround(spec.velocities[l][a] / spec.lambda);
        std::int64_t cu = (coord[a] + e) % n;
        if (cu < 0) cu += n;
        std::int64_t cd = (coord[a] - e) % n;
        if (cd < 0) cd += n;
        up += cu * stride[a];
        dn += cd * stride[a];
      }
      acc += (2.0 - w) * spec.eps_link[l] *
             (state.curr[dn] - 2.0 * state.curr[i] + state.curr[up]);
      acc += w * (alink[l][dn] - alink[l][up]);
    }
    next[i] = acc;
  }
  state.prev.swap(state.curr);
  state.curr.swap(next);
}

}  // namespace trtlb
