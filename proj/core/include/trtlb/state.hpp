// Distribution field over a periodic grid, stored component-major with a
// back buffer for the streaming gather.
#pragma once

#include <cstdint>
#include <vector>

namespace trtlb {

struct LatticeState {
  int q = 0;
  std::int64_t cells = 0;
  std::int64_t step = 0;
  std::vector<double> f;     // q * cells values, component k at f[k*cells ..]
  std::vector<double> back;  // streaming target, same layout
  bool finite = true;        // false once a non-finite value was observed
  std::int64_t blowup_step = -1;

  double* comp(int k) { return f.data() + static_cast<std::int64_t>(k) * cells; }
  const double* comp(int k) const {
    return f.data() + static_cast<std::int64_t>(k) * cells;
  }
};

// Moment u_j = sum_k f_{k,j} of every cell.
std::vector<double> moment(const LatticeState& state);

}  // namespace trtlb
