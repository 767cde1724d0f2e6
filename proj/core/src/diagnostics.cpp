#include "trtlb/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trtlb {

namespace {

double pow_int(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Sum over cells and axes of |v_{j+e_alpha} - v_j| with periodic wrap.
double tv_sum(const double* v, const GridSpec& grid) {
  const std::int64_t n = grid.n;
  std::int64_t stride = 1;
  double acc = 0.0;
  for (int a = 0; a < grid.d; ++a) {
    const std::int64_t cells = grid.cells();
    const std::int64_t period = stride * n;
    for (std::int64_t i = 0; i < cells; ++i) {
      const std::int64_t along = (i / stride) % n;
      const std::int64_t j =
          (along + 1 < n) ? i + stride : i + stride - period;
      acc += std::fabs(v[j] - v[i]);
    }
    stride *= n;
  }
  return acc;
}

}  // namespace

double l1_norm(const std::vector<double>& field, const GridSpec& grid) {
  double acc = 0.0;
  for (double v : field) acc += std::fabs(v);
  return acc * pow_int(grid.dx, grid.d);
}

double l1_norm_components(const LatticeState& state, const GridSpec& grid) {
  double acc = 0.0;
  for (double v : state.f) acc += std::fabs(v);
  return acc * pow_int(grid.dx, grid.d);
}

double total_variation(const std::vector<double>& field, const GridSpec& grid) {
  if (static_cast<std::int64_t>(field.size()) != grid.cells())
    throw std::invalid_argument("field does not match the grid");
  return tv_sum(field.data(), grid) * pow_int(grid.dx, grid.d - 1);
}

double vector_total_variation(const LatticeState& state, const GridSpec& grid) {
  double acc = 0.0;
  for (int k = 0; k < state.q; ++k) acc += tv_sum(state.comp(k), grid);
  return acc * pow_int(grid.dx, grid.d - 1);
}

double equilibrium_distance(const LatticeState& state, const SchemeSpec& spec,
                            const FluxModel& flux, const GridSpec& grid) {
  const int q = spec.q();
  std::vector<double> eq(q);
  double acc = 0.0;
  for (std::int64_t i = 0; i < state.cells; ++i) {
    double u = 0.0;
    for (int k = 0; k < q; ++k) u += state.comp(k)[i];
    equilibrium(spec, flux, u, eq.data());
    for (int k = 0; k < q; ++k) acc += std::fabs(state.comp(k)[i] - eq[k]);
  }
  return acc * pow_int(grid.dx, grid.d);
}

double l1_error(const std::vector<double>& a, const std::vector<double>& b,
                const GridSpec& grid) {
  if (a.size() != b.size())
    throw std::invalid_argument("fields of unequal size");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::fabs(a[i] - b[i]);
  return acc * pow_int(grid.dx, grid.d);
}

std::vector<double> convergence_order(const std::vector<double>& errors) {
  std::vector<double> orders;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i - 1] > 0.0 && errors[i] > 0.0)
      orders.push_back(std::log2(errors[i - 1] / errors[i]));
    else
      orders.push_back(std::numeric_limits<double>::quiet_NaN());
  }
  return orders;
}

double plateau(const std::vector<double>& series) {
  if (series.empty()) throw std::invalid_argument("empty series");
  const std::size_t count = std::max<std::size_t>(1, series.size() / 4);
  double acc = 0.0;
  for (std::size_t i = series.size() - count; i < series.size(); ++i)
    acc += series[i];
  return acc / static_cast<double>(count);
}

double fitted_decay_factor(const std::vector<std::int64_t>& steps,
                           const std::vector<double>& series, double floor,
                           int min_points) {
  if (steps.size() != series.size())
    throw std::invalid_argument("steps and series of unequal length");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (series.empty()) return nan;
  const double level = plateau(series);
  if (!(level > 0.0)) return nan;

  // Contiguous pre-plateau window: residuals still above the fit floor.
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double resid = level - series[i];
    if (resid <= floor * level) break;
    xs.push_back(static_cast<double>(steps[i]));
    ys.push_back(std::log(resid));
  }
  if (static_cast<int>(xs.size()) < min_points) return nan;

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return nan;
  const double slope = (count * sxy - sx * sy) / denom;
  return std::exp(slope);
}

}  // namespace trtlb
