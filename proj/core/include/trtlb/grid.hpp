// Uniform periodic grid with n cells per dimension.
//
// Cells are half-open boxes [lo + i dx, lo + (i+1) dx) per axis.  The linear
// index runs with the first coordinate fastest:
//   idx = i_0 + n i_1 + n^2 i_2 + ...
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace trtlb {

struct GridSpec {
  int d = 0;
  std::int64_t n = 0;           // cells per dimension
  std::vector<double> lo, hi;   // per-dimension interval ends
  double dx = 0.0;              // shared cell width
  double lambda = 0.0;          // lattice speed of the scheme using this grid
  double dt = 0.0;              // dx / lambda

  std::int64_t cells() const {
    std::int64_t c = 1;
    for (int a = 0; a < d; ++a) c *= n;
    return c;
  }
  // Center coordinate of cell i_alpha along axis alpha.
  double center(int alpha, std::int64_t i) const {
    return lo[alpha] + (static_cast<double>(i) + 0.5) * dx;
  }
  void unravel(std::int64_t idx, std::int64_t* coord) const {
    for (int a = 0; a < d; ++a) {
      coord[a] = idx % n;
      idx /= n;
    }
  }
  std::int64_t ravel(const std::int64_t* coord) const {
    std::int64_t idx = 0;
    for (int a = d - 1; a >= 0; --a) idx = idx * n + coord[a];
    return idx;
  }
};

// Requires n >= 1, lambda > 0, and equal widths (b-a)/n across dimensions to
// 1e-14 relative; throws std::invalid_argument otherwise.
GridSpec make_grid(int d, std::int64_t n,
                   const std::vector<std::array<double, 2>>& domain,
                   double lambda);

// Same domain with r times as many cells per dimension.
GridSpec refine_grid(const GridSpec& grid, int r);

}  // namespace trtlb
