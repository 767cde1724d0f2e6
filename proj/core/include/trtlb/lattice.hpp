// Collide-and-stream kernel on a periodic grid.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trtlb/datum.hpp"
#include "trtlb/diagnostics.hpp"
#include "trtlb/flux.hpp"
#include "trtlb/grid.hpp"
#include "trtlb/scheme.hpp"
#include "trtlb/state.hpp"

namespace trtlb {

// State at local equilibrium of the datum's cell averages.
LatticeState init_at_equilibrium(const SchemeSpec& spec, const FluxModel& flux,
                                 const InitialDatum& datum, const GridSpec& grid);
LatticeState init_at_equilibrium(const SchemeSpec& spec, const FluxModel& flux,
                                 const std::vector<double>& averages,
                                 const GridSpec& grid);

// Relax the symmetric and antisymmetric link parts toward the equilibrium of
// the pre-collision moment, in place.
void collide(LatticeState& state, const SchemeSpec& spec, const FluxModel& flux,
             const RelaxPair& relax);

// Periodic shift of every component by its velocity; swaps the buffers and
// increments the step counter.
void stream(LatticeState& state, const SchemeSpec& spec, const GridSpec& grid);

// collide followed by stream, with a non-finite scan that latches
// state.finite/blowup_step after the first offending step.
void step(LatticeState& state, const SchemeSpec& spec, const FluxModel& flux,
          const GridSpec& grid, const RelaxPair& relax);

using Observer = std::function<void(const LatticeState&, const GridSpec&,
                                    std::int64_t step, double t)>;

struct RunOptions {
  double T = 0.0;              // runs ceil(T / dt) full steps
  std::int64_t cadence = 1;    // diagnostics every this many steps
  int subsamples = 64;         // quadrature points per axis for cell averages
  std::vector<Observer> observers;
  // Optional reference probe: returns the L1 error of the moment at (step, t).
  std::function<double(const std::vector<double>&, std::int64_t, double)>
      error_probe;
};

// Initializes at equilibrium, advances ceil(T/dt) steps recording diagnostics
// at the configured cadence, and stops early (reporting partial series) if the
// state turns non-finite.
RunReport run(const SchemeSpec& spec, const FluxModel& flux,
              const InitialDatum& datum, const GridSpec& grid,
              const RelaxPair& relax, const RunOptions& options);

}  // namespace trtlb
