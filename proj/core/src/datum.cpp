#include "trtlb/datum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trtlb {

namespace {

// Length of [a,b] cut to [lo,hi].
double overlap(double a, double b, double lo, double hi) {
  return std::max(0.0, std::min(b, hi) - std::max(a, lo));
}

// Antiderivative of the hat profile (1 - 2|x|)+ restricted to |x| <= 1/2.
double hat_antiderivative(double x) {
  if (x <= -0.5) return 0.0;
  if (x <= 0.0) return x + x * x + 0.25;
  if (x <= 0.5) return 0.25 + x - x * x;
  return 0.5;
}

}  // namespace

std::vector<double> cell_averages(const InitialDatum& datum, const GridSpec& grid,
                                  int subsamples) {
  if (subsamples < 1) throw std::invalid_argument("subsamples must be positive");
  const std::int64_t cells = grid.cells();
  std::vector<double> out(cells);

  std::vector<std::int64_t> coord(grid.d);
  if (datum.exact_average) {
    for (std::int64_t i = 0; i < cells; ++i) {
      grid.unravel(i, coord.data());
      out[i] = datum.exact_average(coord.data(), grid);
    }
  } else {
    const double h = grid.dx / subsamples;
    std::vector<double> x(grid.d);
    std::vector<int> sub(grid.d);
    const double npts = std::pow(static_cast<double>(subsamples), grid.d);
    for (std::int64_t i = 0; i < cells; ++i) {
      grid.unravel(i, coord.data());
      std::fill(sub.begin(), sub.end(), 0);
      double acc = 0.0;
      // Composite midpoint rule over the subsample lattice of the cell.
      while (true) {
        for (int a = 0; a < grid.d; ++a)
          x[a] = grid.lo[a] + coord[a] * grid.dx + (sub[a] + 0.5) * h;
        acc += datum.pointwise(x.data());
        int a = 0;
        for (; a < grid.d; ++a) {
          if (++sub[a] < subsamples) break;
          sub[a] = 0;
        }
        if (a == grid.d) break;
      }
      out[i] = acc / npts;
    }
  }

  if (datum.m < 0.0) throw std::invalid_argument("datum bound must be nonnegative");
  for (double& v : out) v = std::clamp(v, -datum.m, datum.m);
  return out;
}

InitialDatum make_indicator_datum() {
  InitialDatum datum;
  datum.pointwise = [](const double* x) {
    return std::fabs(x[0]) <= 0.5 ? 1.0 : 0.0;
  };
  datum.exact_average = [](const std::int64_t* i, const GridSpec& grid) {
    const double a = grid.lo[0] + i[0] * grid.dx;
    return overlap(a, a + grid.dx, -0.5, 0.5) / grid.dx;
  };
  datum.m = 1.0;
  datum.tv = 2.0;
  datum.name = "indicator";
  return datum;
}

InitialDatum make_hat_datum() {
  InitialDatum datum;
  datum.pointwise = [](const double* x) {
    return std::max(0.0, 1.0 - 2.0 * std::fabs(x[0]));
  };
  datum.exact_average = [](const std::int64_t* i, const GridSpec& grid) {
    const double a = grid.lo[0] + i[0] * grid.dx;
    return (hat_antiderivative(a + grid.dx) - hat_antiderivative(a)) / grid.dx;
  };
  datum.m = 1.0;
  datum.tv = 2.0;
  datum.name = "hat";
  return datum;
}

InitialDatum make_double_indicator_datum() {
  InitialDatum datum;
  datum.pointwise = [](const double* x) {
    const double r = std::fabs(x[0]);
    return (r >= 0.25 && r <= 0.75) ? 1.0 : 0.0;
  };
  datum.exact_average = [](const std::int64_t* i, const GridSpec& grid) {
    const double a = grid.lo[0] + i[0] * grid.dx;
    const double b = a + grid.dx;
    return (overlap(a, b, -0.75, -0.25) + overlap(a, b, 0.25, 0.75)) / grid.dx;
  };
  datum.m = 1.0;
  datum.tv = 4.0;
  datum.name = "indicator-double";
  return datum;
}

InitialDatum make_radial_indicator_datum() {
  InitialDatum datum;
  datum.pointwise = [](const double* x) {
    return x[0] * x[0] + x[1] * x[1] <= 1.0 ? 1.0 : 0.0;
  };
  datum.m = 1.0;
  datum.name = "indicator-radial";
  return datum;
}

InitialDatum make_constant_datum(double value, int d) {
  InitialDatum datum;
  datum.pointwise = [value](const double*) { return value; };
  datum.exact_average = [value](const std::int64_t*, const GridSpec&) {
    return value;
  };
  datum.m = std::fabs(value);
  datum.tv = 0.0;
  datum.name = "constant";
  (void)d;
  return datum;
}

}  // namespace trtlb
