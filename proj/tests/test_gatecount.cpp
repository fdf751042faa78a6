#include <gtest/gtest.h>

#include "tiletrot/error.hpp"
#include "tiletrot/gatecount.hpp"
#include "tiletrot/tables.hpp"

using namespace tiletrot;

namespace {

void expect_tile(TileKind k, TileGateCost e) {
  const auto c = tile_gate_cost(k);
  EXPECT_EQ(c.rot, e.rot) << to_string(k);
  EXPECT_EQ(c.t, e.t) << to_string(k);
  EXPECT_EQ(c.cnot, e.cnot) << to_string(k);
  EXPECT_EQ(c.h, e.h) << to_string(k);
  EXPECT_EQ(c.s, e.s) << to_string(k);
  EXPECT_EQ(c.fswap, e.fswap) << to_string(k);
}

// Per-tile summation kept apart from step_cost_fragment: walk tiles, not the census.
StepCost summed_by_tile(const LatticeGraph& g, const SectionCover& c) {
  StepCost s;
  s.n_rot = g.n_sites();
  s.n_cnot = 2 * g.n_sites();
  const int reps[3] = {2, 2, 1};
  for (int sec = 0; sec < 3; ++sec)
    for (const auto& t : c.sections[sec].tiles)
      for (int spin = 0; spin < 2; ++spin)
        for (int r = 0; r < reps[sec]; ++r) {
          const auto tc = tile_gate_cost(t.kind);
          s.n_rot += tc.rot;
          s.n_t += tc.t;
          s.n_cnot += tc.cnot;
          s.n_h += tc.h;
          s.n_s += tc.s;
          s.n_fswap += tc.fswap;
        }
  return s;
}

}  // namespace

TEST(TileGateCost, Rows) {
  expect_tile(TileKind::S1, {2, 0, 2, 8, 6, 0});
  expect_tile(TileKind::S2, {2, 4, 8, 20, 12, 0});
  expect_tile(TileKind::S4, {2, 12, 20, 44, 24, 2});
  for (auto k : {TileKind::S1, TileKind::S2, TileKind::C4, TileKind::S4}) EXPECT_EQ(tile_gate_cost(k).rot, 2);
}

TEST(HwpRotations, FloorLogPlusOne) {
  EXPECT_EQ(hwp_rotations(1), 1);
  EXPECT_EQ(hwp_rotations(2), 2);
  EXPECT_EQ(hwp_rotations(3), 2);
  EXPECT_EQ(hwp_rotations(8), 4);
  EXPECT_EQ(hwp_rotations(16), 5);
  EXPECT_EQ(hwp_rotations(648), 10);
  EXPECT_THROW(hwp_rotations(0), Error);
}

TEST(PeriodicHubbard, N32) {
  const auto off = step_cost_periodic_hubbard(32);
  EXPECT_EQ(off.n_rot, 192);
  EXPECT_EQ(off.n_t, 320);
  EXPECT_EQ(off.n_qubits, 64);
  EXPECT_EQ(off.n_tof, 0);
  const auto half = step_cost_periodic_hubbard(32, 16);
  EXPECT_EQ(half.n_rot, 60);
  EXPECT_EQ(half.n_t, 1040);
  EXPECT_EQ(half.n_qubits, 79);
  EXPECT_EQ(half.alpha(), 15);
  const auto full = step_cost_periodic_hubbard(32, 32);
  EXPECT_EQ(full.n_rot, 36);
  EXPECT_EQ(full.n_t, 1064);
  EXPECT_EQ(full.n_qubits, 95);
}

TEST(PeriodicExtended, Rows) {
  const auto off = step_cost_periodic_extended(32);
  EXPECT_EQ(off.n_rot, 384);
  EXPECT_EQ(off.n_t, 320);
  const auto full = step_cost_periodic_extended(32, 32);
  EXPECT_EQ(full.n_rot, 72);
  EXPECT_EQ(full.n_t, 1808);
  EXPECT_EQ(full.n_qubits, 95);
  const auto big = step_cost_periodic_extended(648, 324);
  EXPECT_EQ(big.n_rot, 216);
  EXPECT_EQ(big.n_t, 37488);
}

TEST(PeriodicSteps, AccountingIdentities) {
  for (count_t n : {32, 72, 128, 648})
    for (count_t m : {count_t{1}, n / 4, n / 2, n}) {
      for (const auto& s : {step_cost_periodic_hubbard(n, m), step_cost_periodic_extended(n, m)}) {
        EXPECT_EQ(s.n_t, 10 * n + kTPerToffoli * s.n_tof);
        EXPECT_EQ(s.n_tof, s.rotation_layers * n / m * (m - 1));
        EXPECT_EQ(s.n_qubits, 2 * n + m - 1);
      }
    }
  const auto a = step_cost_periodic_hubbard(72, 1);
  EXPECT_EQ(a.n_rot, 6 * 72);
  EXPECT_EQ(step_cost_periodic_extended(72, 1).n_rot, 12 * 72);
}

TEST(PeriodicSteps, Errors) {
  try {
    step_cost_periodic_hubbard(32, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::divisibility);
  }
  EXPECT_THROW(step_cost_periodic_extended(0), Error);
  EXPECT_THROW(step_cost_periodic_hubbard(32, 0), Error);
}

TEST(Ppp, DirectEvaluation) {
  const auto h = step_cost_ppp(32, true);
  EXPECT_EQ(h.n_t, 8752);
  EXPECT_EQ(h.n_rot, 408);
  EXPECT_EQ(h.n_tof, 2 * 32 * 32 + 2 * 32 - 4);
  EXPECT_EQ(h.n_qubits, 3 * 32 - 1);
  const auto o = step_cost_ppp(32, false);
  EXPECT_EQ(o.n_rot, 2176);
  EXPECT_EQ(o.n_t, 320);
}

TEST(Fragment, PeriodicCollapse) {
  for (int l : {4, 6}) {
    const auto g = build_periodic_hex(l, l);
    const auto s = step_cost_fragment(g, cover_periodic_hex(g));
    const count_t n = g.n_sites();
    EXPECT_EQ(s.n_rot, 6 * n);
    EXPECT_EQ(s.n_t, 10 * n);
    EXPECT_EQ(s.n_qubits, 2 * n);
    const auto p = step_cost_periodic_hubbard(n);
    EXPECT_EQ(s.n_rot, p.n_rot);
    EXPECT_EQ(s.n_t, p.n_t);
    EXPECT_EQ(s.n_h, p.n_h);
    EXPECT_EQ(s.n_s, p.n_s);
  }
}

TEST(Fragment, AllS2Formula) {
  const auto g = build_periodic_hex(6, 6);
  const auto c = cover_periodic_hex(g);
  const count_t nb = c.sections[0].tiles.size(), nr = c.sections[1].tiles.size(), ng = c.sections[2].tiles.size();
  const auto s = step_cost_fragment(g, c);
  EXPECT_EQ(s.n_rot, g.n_sites() + 8 * nb + 8 * nr + 4 * ng);
  EXPECT_EQ(s.n_t, 16 * nb + 16 * nr + 8 * ng);
}

TEST(Fragment, MatchesPerTileSummation) {
  for (const auto& cells : {fragment_patch_a(), fragment_patch_b(), std::vector<Cell>{{0, 0}}}) {
    const auto g = build_hex_fragment(cells);
    const auto c = cover_hex_fragment(g);
    const auto s = step_cost_fragment(g, c);
    const auto e = summed_by_tile(g, c);
    EXPECT_EQ(s.n_rot, e.n_rot);
    EXPECT_EQ(s.n_t, e.n_t);
    EXPECT_EQ(s.n_cnot, e.n_cnot);
    EXPECT_EQ(s.n_h, e.n_h);
    EXPECT_EQ(s.n_s, e.n_s);
    EXPECT_EQ(s.n_fswap, e.n_fswap);
    EXPECT_EQ(s.n_fswap_relabel, 0);
  }
}

TEST(Fragment, EmptySectionsLeaveOnlyTheInteractionLayer) {
  const auto g = build_chain(4);
  const auto s = step_cost_fragment(g, SectionCover{{Section{"blue", {}}, Section{"red", {}}, Section{"gold", {}}}});
  EXPECT_EQ(s.n_rot, 4);
  EXPECT_EQ(s.n_t, 0);
  EXPECT_THROW(step_cost_fragment(g, SectionCover{}), Error);
}

TEST(Boundary, ExtraHalfLayers) {
  const auto s = step_cost_periodic_hubbard(32);
  const auto b = boundary_overhead(s, 32);
  EXPECT_EQ(b.n_rot, 64);
  EXPECT_EQ(b.n_t, 0);
}

TEST(TableRows, EveryHwpRowRecomputes) {
  for (std::size_t li = 0; li < reference::kL.size(); ++li) {
    const count_t n = 2 * reference::kL[li] * reference::kL[li];
    const count_t ms[4] = {1, n / 4, n / 2, n};
    for (int h = 0; h < 4; ++h) {
      const auto hub = step_cost_periodic_hubbard(n, ms[h]);
      const auto ext = step_cost_periodic_extended(n, ms[h]);
      EXPECT_EQ(hub.n_qubits, reference::kQubits[h][li]);
      EXPECT_EQ(hub.n_rot, reference::kRotHubbard[h][li]);
      EXPECT_EQ(hub.n_t, reference::kTHubbard[h][li]);
      EXPECT_EQ(ext.n_rot, reference::kRotExtended[h][li]);
      EXPECT_EQ(ext.n_t, reference::kTExtended[h][li]);
    }
  }
}
