#include <gtest/gtest.h>

#include "tiletrot/error.hpp"
#include "tiletrot/lattice.hpp"

using namespace tiletrot;

namespace {

int degree_sum(const LatticeGraph& g) {
  int s = 0;
  for (int i = 0; i < g.n_sites(); ++i) s += g.degree(i);
  return s;
}

}  // namespace

TEST(PeriodicHex, FourByFour) {
  const auto g = build_periodic_hex(4, 4);
  EXPECT_EQ(g.n_sites(), 32);
  EXPECT_EQ(g.n_edges(), 48);
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{3, 32}}));
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_EQ(g.count_role(SiteRole::center), 32);
}

TEST(PeriodicHex, TwoByTwoHasNoMultiEdges) {
  const auto g = build_periodic_hex(2, 2);
  EXPECT_EQ(g.n_sites(), 8);
  EXPECT_EQ(g.n_edges(), 12);
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{3, 8}}));
}

TEST(PeriodicHex, BipartiteBySublattice) {
  const auto g = build_periodic_hex(6, 4);
  for (auto [a, b] : g.edges()) EXPECT_NE(g.site(a).color, g.site(b).color);
}

TEST(PeriodicHex, AdjacencySymmetricForManySizes) {
  for (int lx = 2; lx <= 7; ++lx)
    for (int ly = 2; ly <= 5; ++ly) {
      const auto g = build_periodic_hex(lx, ly);
      const auto& a = g.adjacency();
      EXPECT_EQ((a - a.transpose()).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_EQ(a.sum(), 2.0 * g.n_edges());
      EXPECT_EQ(degree_sum(g), 2 * g.n_edges());
      EXPECT_EQ(g.n_edges(), 3 * lx * ly);
    }
}

TEST(PeriodicHex, EdgesSortedWithSmallerIndexFirst) {
  const auto g = build_periodic_hex(4, 4);
  for (auto [a, b] : g.edges()) EXPECT_LT(a, b);
  EXPECT_TRUE(std::is_sorted(g.edges().begin(), g.edges().end()));
}

TEST(PeriodicHex, RejectsTooSmall) {
  try {
    build_periodic_hex(1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dimension_too_small);
  }
}

TEST(HexFragment, SingleHexagon) {
  const auto g = build_hex_fragment({{0, 0}});
  EXPECT_EQ(g.n_sites(), 6);
  EXPECT_EQ(g.n_edges(), 6);
  EXPECT_EQ(g.count_role(SiteRole::edge), 6);
  EXPECT_EQ(g.count_role(SiteRole::center), 0);
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{2, 6}}));
}

TEST(HexFragment, PatchA) {
  const auto g = build_hex_fragment(fragment_patch_a());
  EXPECT_EQ(g.n_sites(), 70);
  EXPECT_EQ(g.count_role(SiteRole::edge), 22);
  EXPECT_EQ(g.count_role(SiteRole::center), 48);
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{2, 22}, {3, 48}}));
}

TEST(HexFragment, PatchB) {
  const auto g = build_hex_fragment(fragment_patch_b());
  EXPECT_EQ(g.n_sites(), 48);
  EXPECT_EQ(g.count_role(SiteRole::edge), 20);
  EXPECT_EQ(g.count_role(SiteRole::center), 28);
}

TEST(HexFragment, TwoFusedHexagonsShareAnEdge) {
  const auto g = build_hex_fragment({{0, 0}, {1, 0}});
  EXPECT_EQ(g.n_sites(), 10);
  EXPECT_EQ(g.n_edges(), 11);
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{2, 8}, {3, 2}}));
}

TEST(HexFragment, RhombusCountsMatchEuler) {
  // A connected planar patch of h hexagons with V vertices has V + h - 1 edges.
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 4; ++b) {
      const auto cells = rhombus_cells(a, b);
      const auto g = build_hex_fragment(cells);
      EXPECT_EQ(g.n_edges(), g.n_sites() + static_cast<int>(cells.size()) - 1);
      EXPECT_EQ(g.n_sites(), 2 * (a + 1) * (b + 1) - 2);
    }
}

TEST(HexFragment, InvalidCellLists) {
  auto kind_of = [](const std::vector<Cell>& cells) {
    try {
      build_hex_fragment(cells);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::config;
  };
  EXPECT_EQ(kind_of({}), ErrorKind::invalid_fragment);
  EXPECT_EQ(kind_of({{0, 0}, {0, 0}}), ErrorKind::invalid_fragment);
  EXPECT_EQ(kind_of({{0, 0}, {5, 5}}), ErrorKind::invalid_fragment);
}

TEST(SquareFragment, Counts) {
  const auto g = build_square_fragment(4, 3);
  EXPECT_EQ(g.n_sites(), 12);
  EXPECT_EQ(g.n_edges(), 3 * 3 + 4 * 2);
  EXPECT_EQ(degree_histogram(g), (std::map<int, int>{{2, 4}, {3, 6}, {4, 2}}));
}

TEST(RingAndChain, Degrees) {
  EXPECT_EQ(build_ring(6).regular_degree(), 2);
  EXPECT_EQ(build_ring(3).n_edges(), 3);
  const auto c = build_chain(5);
  EXPECT_EQ(c.n_edges(), 4);
  EXPECT_FALSE(c.regular_degree().has_value());
  EXPECT_THROW(build_ring(2), Error);
  EXPECT_THROW(build_chain(1), Error);
}

TEST(LatticeGraph, RejectsBadEdges) {
  std::vector<SiteInfo> sites(3);
  EXPECT_THROW(LatticeGraph(LatticeKind::custom, sites, {{0, 0}}), Error);
  EXPECT_THROW(LatticeGraph(LatticeKind::custom, sites, {{0, 3}}), Error);
  EXPECT_THROW(LatticeGraph(LatticeKind::custom, sites, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(LatticeGraph(LatticeKind::custom, {}, {}), Error);
}

TEST(LatticeGraph, KindNamesRoundTrip) {
  for (auto k : {LatticeKind::periodic_hex, LatticeKind::hex_fragment, LatticeKind::square_fragment,
                 LatticeKind::custom})
    EXPECT_EQ(lattice_kind_from_string(to_string(k)), k);
  EXPECT_THROW(lattice_kind_from_string("kagome"), Error);
}
