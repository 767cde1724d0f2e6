#include "trtlb/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace trtlb {

GridSpec make_grid(int d, std::int64_t n,
                   const std::vector<std::array<double, 2>>& domain,
                   double lambda) {
  if (d < 1) throw std::invalid_argument("grid dimension must be at least 1");
  if (n < 1) throw std::invalid_argument("grid needs at least one cell per dimension");
  if (!(lambda > 0.0)) throw std::invalid_argument("lattice speed must be positive");
  if (static_cast<int>(domain.size()) != d)
    throw std::invalid_argument("domain needs one interval per dimension");

  GridSpec grid;
  grid.d = d;
  grid.n = n;
  grid.lambda = lambda;
  grid.lo.resize(d);
  grid.hi.resize(d);
  for (int a = 0; a < d; ++a) {
    grid.lo[a] = domain[a][0];
    grid.hi[a] = domain[a][1];
    if (!(grid.hi[a] > grid.lo[a]))
      throw std::invalid_argument("domain interval must have positive length");
  }
  grid.dx = (grid.hi[0] - grid.lo[0]) / static_cast<double>(n);
  for (int a = 1; a < d; ++a) {
    const double dxa = (grid.hi[a] - grid.lo[a]) / static_cast<double>(n);
    if (std::fabs(dxa - grid.dx) > 1e-14 * std::fabs(grid.dx))
      throw std::invalid_argument("cell width must match across dimensions");
  }
  grid.dt = grid.dx / lambda;
  return grid;
}

GridSpec refine_grid(const GridSpec& grid, int r) {
  if (r < 1) throw std::invalid_argument("refinement factor must be at least 1");
  std::vector<std::array<double, 2>> domain(grid.d);
  for (int a = 0; a < grid.d; ++a) domain[a] = {grid.lo[a], grid.hi[a]};
  return make_grid(grid.d, grid.n * r, domain, grid.lambda);
}

}  // namespace trtlb
