#include "trtlb/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trtlb {

std::vector<double> moment(const LatticeState& state) {
  std::vector<double> u(state.cells, 0.0);
  for (int k = 0; k < state.q; ++k) {
    const double* fk = state.comp(k);
    for (std::int64_t i = 0; i < state.cells; ++i) u[i] += fk[i];
  }
  return u;
}

LatticeState init_at_equilibrium(const SchemeSpec& spec, const FluxModel& flux,
                                 const std::vector<double>& averages,
                                 const GridSpec& grid) {
  LatticeState state;
  state.q = spec.q();
  state.cells = grid.cells();
  if (static_cast<std::int64_t>(averages.size()) != state.cells)
    throw std::invalid_argument("cell-average field does not match the grid");
  state.f.resize(static_cast<std::int64_t>(state.q) * state.cells);
  state.back.resize(state.f.size());
  std::vector<double> eq(state.q);
  for (std::int64_t i = 0; i < state.cells; ++i) {
    equilibrium(spec, flux, averages[i], eq.data());
    for (int k = 0; k < state.q; ++k) state.comp(k)[i] = eq[k];
  }
  return state;
}

LatticeState init_at_equilibrium(const SchemeSpec& spec, const FluxModel& flux,
                                 const InitialDatum& datum, const GridSpec& grid) {
  return init_at_equilibrium(spec, flux, cell_averages(datum, grid), grid);
}

void collide(LatticeState& state, const SchemeSpec& spec, const FluxModel& flux,
             const RelaxPair& relax) {
  const int L = spec.L;
  const double ws = relax.omega_s;
  const double wa = relax.omega_a;
  std::vector<double> phi(spec.d);

  double* f0 = state.comp(0);
  for (std::int64_t i = 0; i < state.cells; ++i) {
    // Pre-collision moment of this cell; every component relaxes toward the
    // equilibrium of this one value.
    double u = f0[i];
    for (int l = 0; l < L; ++l)
      u += state.comp(spec.plus(l))[i] + state.comp(spec.minus(l))[i];
    for (int alpha = 0; alpha < spec.d; ++alpha)
      phi[alpha] = flux.eval(alpha, u);

    f0[i] += ws * (spec.eps_zero * u - f0[i]);
    for (int l = 0; l < L; ++l) {
      double* fp = state.comp(spec.plus(l));
      double* fm = state.comp(spec.minus(l));
      const double s = 0.5 * (fp[i] + fm[i]);
      const double a = 0.5 * (fp[i] - fm[i]);
      double aeq = 0.0;
      for (int alpha = 0; alpha < spec.d; ++alpha)
        aeq += spec.sigma_link[l][alpha] * phi[alpha];
      const double seq = spec.eps_link[l] * u;
      const double s_post = s + ws * (seq - s);
      const double a_post = a + wa * (aeq - a);
      fp[i] = s_post + a_post;
      fm[i] = s_post - a_post;
    }
  }
}

void stream(LatticeState& state, const SchemeSpec& spec, const GridSpec& grid) {
  const std::int64_t n = grid.n;
  const std::int64_t cells = state.cells;

  // Zero velocity stays put.
  std::copy(state.comp(0), state.comp(0) + cells,
            state.back.data());

  std::vector<std::int64_t> stride(grid.d);
  stride[0] = 1;
  for (int a = 1; a < grid.d; ++a) stride[a] = stride[a - 1] * n;

  std::vector<std::int64_t> coord(grid.d);
  std::vector<std::int64_t> shift(grid.d);
  for (int l = 0; l < spec.L; ++l) {
    for (int a = 0; a < grid.d; ++a)
      shift[a] = std::llround(spec.velocities[l][a] / spec.lambda);
    for (int sign = 0; sign < 2; ++sign) {
      const int k = sign == 0 ? spec.plus(l) : spec.minus(l);
      const double* src = state.comp(k);
      double* dst = state.back.data() + static_cast<std::int64_t>(k) * cells;
      std::fill(coord.begin(), coord.end(), 0);
      for (std::int64_t i = 0; i < cells; ++i) {
        std::int64_t sidx = 0;
        for (int a = 0; a < grid.d; ++a) {
          const std::int64_t e = sign == 0 ? shift[a] : -shift[a];
          std::int64_t c = (coord[a] - e) % n;
          if (c < 0) c += n;
          sidx += c * stride[a];
        }
        dst[i] = src[sidx];
        int a = 0;
        for (; a < grid.d; ++a) {
          if (++coord[a] < n) break;
          coord[a] = 0;
        }
      }
    }
  }
  state.f.swap(state.back);
  state.step += 1;
}

void step(LatticeState& state, const SchemeSpec& spec, const FluxModel& flux,
          const GridSpec& grid, const RelaxPair& relax) {
  collide(state, spec, flux, relax);
  stream(state, spec, grid);
  if (state.finite) {
    for (double v : state.f) {
      if (!std::isfinite(v)) {
        state.finite = false;
        state.blowup_step = state.step;
        break;
      }
    }
  }
}

namespace {

void record(RunReport& report, const LatticeState& state, const SchemeSpec& spec,
            const FluxModel& flux, const GridSpec& grid, double t,
            const RunOptions& options) {
  const std::vector<double> u = moment(state);
  report.steps.push_back(state.step);
  report.times.push_back(t);
  double lo = u.empty() ? 0.0 : u[0];
  double hi = lo;
  for (double v : u) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  report.sup_u.push_back(hi);
  report.inf_u.push_back(lo);
  report.tv_u.push_back(total_variation(u, grid));
  report.tv_vec.push_back(vector_total_variation(state, grid));
  report.eq_dist.push_back(equilibrium_distance(state, spec, flux, grid));
  if (options.error_probe) {
    const double err = options.error_probe(u, state.step, t);
    report.l1_err.push_back(err);
    if (std::isfinite(err))
      report.linf_l1_err = std::max(report.linf_l1_err, err);
  }
  for (const Observer& obs : options.observers) obs(state, grid, state.step, t);
}

}  // namespace

RunReport run(const SchemeSpec& spec, const FluxModel& flux,
              const InitialDatum& datum, const GridSpec& grid,
              const RelaxPair& relax, const RunOptions& options) {
  if (options.cadence < 1)
    throw std::invalid_argument("observer cadence must be positive");
  LatticeState state = init_at_equilibrium(
      spec, flux, cell_averages(datum, grid, options.subsamples), grid);
  const double ratio = options.T / grid.dt;
  const std::int64_t nsteps =
      std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(ratio - 1e-9)));

  RunReport report;
  record(report, state, spec, flux, grid, 0.0, options);
  for (std::int64_t s = 1; s <= nsteps; ++s) {
    step(state, spec, flux, grid, relax);
    const double t = static_cast<double>(s) * grid.dt;
    if (s % options.cadence == 0 || s == nsteps || !state.finite)
      record(report, state, spec, flux, grid, t, options);
    if (!state.finite) break;
  }
  report.blew_up = !state.finite;
  report.blowup_step = state.blowup_step;
  report.total_steps = state.step;
  report.final_time = static_cast<double>(state.step) * grid.dt;
  report.final_u = moment(state);
  report.final_f = state.f;
  return report;
}

}  // namespace trtlb
