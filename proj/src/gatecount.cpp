#include "tiletrot/gatecount.hpp"

#include <bit>

#include "tiletrot/error.hpp"

namespace tiletrot {

TileGateCost tile_gate_cost(TileKind kind) {
  switch (kind) {
    case TileKind::S1: return {2, 0, 2, 8, 6, 0};
    case TileKind::S2: return {2, 4, 8, 20, 12, 0};
    case TileKind::C4: return {2, 8, 14, 32, 18, 0};
    case TileKind::S4: return {2, 12, 20, 44, 24, 2};
  }
  throw Error(ErrorKind::unknown_kind, "tile kind");
}

count_t hwp_rotations(count_t m) {
  if (m < 1) throw Error(ErrorKind::invalid_parameter, "HWP group size must be >= 1");
  return static_cast<count_t>(std::bit_width(static_cast<std::uint64_t>(m)));
}

StepCost step_cost_fragment(const LatticeGraph& g, const SectionCover& cover) {
  if (cover.sections.size() != 3)
    throw Error(ErrorKind::section_count, "fragment step needs a blue/red/gold cover");
  const count_t n = g.n_sites();
  StepCost c;
  c.n_rot = n;
  c.n_cnot = 2 * n;
  c.rotation_layers = 1;
  c.cnot_layers = 2;
  const count_t mult[3] = {2, 2, 1};
  const auto census = cover_tile_census(cover);
  for (std::size_t s = 0; s < 3; ++s)
    for (auto [kind, count] : census[s]) {
      const auto tc = tile_gate_cost(kind);
      const count_t apps = 2 * mult[s] * count;  // two spin sectors
      c.n_rot += apps * tc.rot;
      c.n_t += apps * tc.t;
      c.n_cnot += apps * tc.cnot;
      c.n_h += apps * tc.h;
      c.n_s += apps * tc.s;
      c.n_fswap += apps * tc.fswap;
    }
  c.n_qubits = 2 * n;
  return c;
}

StepCost boundary_overhead(const StepCost& per_step, count_t n_sites) {
  StepCost o;
  o.n_rot = 2 * n_sites * (per_step.rotation_layers > 0 ? 1 : 0);
  o.n_cnot = 2 * per_step.cnot_layers * n_sites;
  o.n_qubits = per_step.n_qubits;
  return o;
}

namespace {

// Hopping part shared by the periodic models: 5 x N/4 S2 applications per spin.
void add_periodic_hopping_cliffords(StepCost& c, count_t n) {
  const auto tc = tile_gate_cost(TileKind::S2);
  const count_t apps = 5 * (n / 4) * 2;
  c.n_cnot += apps * tc.cnot;
  c.n_h += apps * tc.h;
  c.n_s += apps * tc.s;
}

StepCost layered(count_t n, count_t layers, count_t cnot_layers, count_t m) {
  if (n <= 0) throw Error(ErrorKind::invalid_parameter, "N must be positive");
  if (m < 1 || n % m != 0)
    throw Error(ErrorKind::divisibility, "HWP group size " + std::to_string(m) + " must divide N=" + std::to_string(n));
  StepCost c;
  c.hwp_m = m;
  c.rotation_layers = layers;
  c.cnot_layers = cnot_layers;
  const count_t groups = layers * n / m;
  c.n_rot = groups * hwp_rotations(m);
  c.n_tof = groups * (m - 1);
  c.n_t = 10 * n + kTPerToffoli * c.n_tof;
  c.n_qubits = 2 * n + m - 1;
  c.n_cnot = cnot_layers * n;
  add_periodic_hopping_cliffords(c, n);
  return c;
}

}  // namespace

StepCost step_cost_periodic_hubbard(count_t n_sites, count_t m) { return layered(n_sites, 6, 2, m); }

StepCost step_cost_periodic_extended(count_t n_sites, count_t m) { return layered(n_sites, 12, 14, m); }

StepCost step_cost_ppp(count_t n_sites, bool hwp) {
  const count_t n = n_sites;
  if (n <= 0) throw Error(ErrorKind::invalid_parameter, "N must be positive");
  // 2N + 4 layers of N equal-angle rotations; HWP merges each full layer.
  StepCost c = layered(n, 2 * n + 4, 0, hwp ? n : 1);
  return c;
}

}  // namespace tiletrot
