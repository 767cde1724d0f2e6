// Initial data u0 and their cell averages.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trtlb/grid.hpp"

namespace trtlb {

struct InitialDatum {
  // Pointwise value at x (array of d coordinates).
  std::function<double(const double*)> pointwise;
  // Exact cell average given per-axis cell indices; empty when only the
  // quadrature path applies.
  std::function<double(const std::int64_t*, const GridSpec&)> exact_average;
  double m = 0.0;        // data bound: |u0| <= m
  double tv = -1.0;      // total variation when known, negative otherwise
  std::string name;
};

// Composite-midpoint cell averages (subsamples per dimension, default 64),
// clamped to [-m, m]; uses exact_average when the datum provides it.
std::vector<double> cell_averages(const InitialDatum& datum, const GridSpec& grid,
                                  int subsamples = 64);

// Named data on [-1,1]^d, all bounded by m = 1.
InitialDatum make_indicator_datum();          // d=1: 1 on |x| <= 1/2, TV 2
InitialDatum make_hat_datum();                // d=1: (1-2|x|)+ on |x| <= 1/2, TV 2
InitialDatum make_double_indicator_datum();   // d=1: 1 on 1/4 <= |x| <= 3/4, TV 4
InitialDatum make_radial_indicator_datum();   // d=2: 1 on |x|_2 <= 1
InitialDatum make_constant_datum(double value, int d);

}  // namespace trtlb
