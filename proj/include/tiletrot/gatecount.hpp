#pragma once

#include <cstdint>

#include "tiletrot/lattice.hpp"
#include "tiletrot/tiling.hpp"

namespace tiletrot {

using count_t = std::int64_t;

struct TileGateCost {
  count_t rot = 0, t = 0, cnot = 0, h = 0, s = 0, fswap = 0;
};

struct StepCost {
  count_t n_rot = 0;
  count_t n_t = 0;      // includes 4 T per Toffoli
  count_t n_tof = 0;
  count_t n_qubits = 0;
  count_t n_cnot = 0, n_h = 0, n_s = 0, n_fswap = 0;
  count_t n_fswap_relabel = 0;  // inter-section reordering layers, not costed
  count_t rotation_layers = 0;  // layers of N equal-angle rotations
  count_t cnot_layers = 0;      // Coulomb-layer CNOT layers of N gates
  count_t hwp_m = 1;
  count_t alpha() const { return hwp_m - 1; }
};

inline constexpr count_t kTPerToffoli = 4;

TileGateCost tile_gate_cost(TileKind kind);

// Merged-boundary cost of one step: blue and red twice, gold once, one H_I layer.
StepCost step_cost_fragment(const LatticeGraph& g, const SectionCover& cover);

// Rotations of the two extra half-angle Coulomb layers at the start and end of a run.
StepCost boundary_overhead(const StepCost& per_step, count_t n_sites);

StepCost step_cost_periodic_hubbard(count_t n_sites, count_t m = 1);
StepCost step_cost_periodic_extended(count_t n_sites, count_t m = 1);
StepCost step_cost_ppp(count_t n_sites, bool hwp);

// floor(log2 m + 1), the rotations left after merging m equal angles.
count_t hwp_rotations(count_t m);

}  // namespace tiletrot
