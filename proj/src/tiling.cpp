#include "tiletrot/tiling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "tiletrot/error.hpp"

namespace tiletrot {

const char* to_string(TileKind k) {
  switch (k) {
    case TileKind::S1: return "S1";
    case TileKind::S2: return "S2";
    case TileKind::C4: return "C4";
    case TileKind::S4: return "S4";
  }
  return "?";
}

TileKind tile_kind_from_string(const std::string& s) {
  for (auto k : {TileKind::S1, TileKind::S2, TileKind::C4, TileKind::S4})
    if (s == to_string(k)) return k;
  throw Error(ErrorKind::unknown_kind, "tile kind '" + s + "'");
}

namespace {

TileTemplate make_template(TileKind kind) {
  const double r2 = std::sqrt(0.5);
  TileTemplate t{kind, {}, 0.0, 0.0, {}, 0};
  switch (kind) {
    case TileKind::S1:
      t.adjacency = Eigen::MatrixXd{{0, 1}, {1, 0}};
      t.lambda_plus = 1.0;
      t.eigenvectors = Eigen::MatrixXd{{r2, r2}, {r2, -r2}};
      break;
    case TileKind::S2:
      t.adjacency = Eigen::MatrixXd{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}};
      t.lambda_plus = std::sqrt(2.0);
      t.eigenvectors = Eigen::MatrixXd{{r2, r2}, {0.5, -0.5}, {0.5, -0.5}};
      break;
    case TileKind::C4:
      t.adjacency = Eigen::MatrixXd{{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}};
      t.lambda_plus = 2.0;
      t.eigenvectors = Eigen::MatrixXd{{0.5, 0.5}, {0.5, 0.5}, {0.5, -0.5}, {0.5, -0.5}};
      break;
    case TileKind::S4: {
      t.adjacency = Eigen::MatrixXd::Zero(5, 5);
      t.adjacency.row(0).tail(4).setOnes();
      t.adjacency.col(0).tail(4).setOnes();
      t.lambda_plus = 2.0;
      const double q = 0.5 * r2;
      t.eigenvectors = Eigen::MatrixXd{{r2, r2}, {q, -q}, {q, -q}, {q, -q}, {q, -q}};
      break;
    }
  }
  t.lambda_minus = -t.lambda_plus;
  t.n_zero = static_cast<int>(t.adjacency.rows()) - 2;
  return t;
}

}  // namespace

const TileTemplate& tile_catalog(TileKind kind) {
  static const std::array<TileTemplate, 4> catalog = {make_template(TileKind::S1), make_template(TileKind::S2),
                                                      make_template(TileKind::C4), make_template(TileKind::S4)};
  return catalog.at(static_cast<std::size_t>(kind));
}

int tile_size(TileKind kind) { return static_cast<int>(tile_catalog(kind).adjacency.rows()); }

std::vector<Edge> Tile::edges() const {
  const auto& a = tile_catalog(kind).adjacency;
  std::vector<Edge> out;
  const int q = std::min(static_cast<int>(sites.size()), static_cast<int>(a.rows()));
  for (int p = 0; p < q; ++p)
    for (int r = p + 1; r < q; ++r)
      if (a(p, r) != 0.0) out.emplace_back(std::min(sites[p], sites[r]), std::max(sites[p], sites[r]));
  return out;
}

namespace {

// Split an edge set with maximum degree 2 and no 3-paths into S2/S1 tiles.
// Fails (returns false) when a component is not a path of length 1 or 2.
bool edges_to_tiles(const std::vector<Edge>& edges, std::vector<Tile>& tiles) {
  std::map<int, std::vector<int>> nb;
  for (auto [i, j] : edges) {
    nb[i].push_back(j);
    nb[j].push_back(i);
  }
  std::set<Edge> used;
  for (auto& [c, list] : nb) {
    std::sort(list.begin(), list.end());
    if (list.size() > 2) return false;
    if (list.size() == 2) {
      for (int leaf : list)
        if (nb[leaf].size() != 1) return false;
      tiles.push_back({TileKind::S2, {c, list[0], list[1]}});
      for (int leaf : list) used.insert({std::min(c, leaf), std::max(c, leaf)});
    }
  }
  for (auto e : edges)
    if (!used.count(e)) {
      if (nb[e.first].size() != 1 || nb[e.second].size() != 1) return false;
      tiles.push_back({TileKind::S1, {e.first, e.second}});
    }
  std::sort(tiles.begin(), tiles.end(), [](const Tile& a, const Tile& b) { return a.sites < b.sites; });
  return true;
}

constexpr const char* kColors[3] = {"blue", "red", "gold"};

// Section of each of the three bonds of an A site, indexed by cell parity.
// Bond d0 -> B(x,y), d1 -> B(x-1,y), d2 -> B(x,y-1). 0 = blue, 1 = red, 2 = gold.
constexpr int kMotif[2][2][3] = {
    {{0, 0, 2}, {2, 1, 1}},  // x even: y even, y odd
    {{2, 2, 0}, {0, 1, 1}},  // x odd
};

int motif_section(int x, int y, int bond) {
  auto par = [](int v) { return ((v % 2) + 2) % 2; };
  return kMotif[par(x)][par(y)][bond];
}

SectionCover cover_from_sections(const std::array<std::vector<Edge>, 3>& parts) {
  SectionCover cover;
  for (int s = 0; s < 3; ++s) {
    Section sec{kColors[s], {}};
    if (!edges_to_tiles(parts[static_cast<std::size_t>(s)], sec.tiles))
      throw Error(ErrorKind::no_cover, "section does not split into S2/S1 tiles");
    cover.sections.push_back(std::move(sec));
  }
  return cover;
}

}  // namespace

SectionCover cover_periodic_hex(const LatticeGraph& g) {
  if (g.kind() != LatticeKind::periodic_hex || !g.dims())
    throw Error(ErrorKind::unsupported_lattice, "cover_periodic_hex needs a periodic_hex lattice");
  auto [lx, ly] = *g.dims();
  if (lx % 2 || ly % 2) throw Error(ErrorKind::no_cover, "three-section cover needs even Lx and Ly");
  auto idx = [&](int x, int y) { return 2 * (((x % lx + lx) % lx) + ((y % ly + ly) % ly) * lx) + 1; };
  std::array<std::vector<Edge>, 3> parts;
  for (int y = 0; y < ly; ++y)
    for (int x = 0; x < lx; ++x) {
      const int a = 2 * (x + y * lx);
      const int b[3] = {idx(x, y), idx(x - 1, y), idx(x, y - 1)};
      for (int d = 0; d < 3; ++d)
        parts[static_cast<std::size_t>(motif_section(x, y, d))].emplace_back(std::min(a, b[d]), std::max(a, b[d]));
    }
  auto cover = cover_from_sections(parts);
  auto report = validate_cover(g, cover);
  if (!report.valid) throw Error(ErrorKind::no_cover, report.violations.front());
  return cover;
}

namespace {

// Rotations per Trotter step weight: blue and red count twice, gold once.
int weighted_tiles(const SectionCover& c) {
  return 2 * static_cast<int>(c.sections[0].tiles.size()) + 2 * static_cast<int>(c.sections[1].tiles.size()) +
         static_cast<int>(c.sections[2].tiles.size());
}

}  // namespace

// The periodic motif restricted to a fragment keeps tiles site-disjoint, and
// boundary-cut S2 tiles become S1 tiles. All four motif offsets are tried and
// the cheapest valid cover wins (ties: lowest offset).
SectionCover cover_hex_fragment(const LatticeGraph& g) {
  if (g.kind() != LatticeKind::hex_fragment)
    throw Error(ErrorKind::unsupported_lattice, "cover_hex_fragment needs a hex_fragment lattice");
  std::optional<SectionCover> best;
  for (int ox = 0; ox < 2; ++ox)
    for (int oy = 0; oy < 2; ++oy) {
      std::array<std::vector<Edge>, 3> parts;
      for (auto [i, j] : g.edges()) {
        const int a = g.site(i).color == 0 ? i : j;
        const int b = a == i ? j : i;
        const auto& sa = g.site(a);
        const auto& sb = g.site(b);
        int bond = 0;
        if (sb.l_x == sa.l_x - 1) bond = 1;
        else if (sb.l_y == sa.l_y - 1) bond = 2;
        parts[static_cast<std::size_t>(motif_section(sa.l_x + ox, sa.l_y + oy, bond))].emplace_back(i, j);
      }
      SectionCover c;
      try {
        c = cover_from_sections(parts);
      } catch (const Error&) {
        continue;
      }
      if (!validate_cover(g, c).valid) continue;
      if (!best || weighted_tiles(c) < weighted_tiles(*best)) best = std::move(c);
    }
  if (!best) throw Error(ErrorKind::no_cover, "no three-section cover found for fragment");
  return *best;
}

ValidationReport validate_cover(const LatticeGraph& g, const SectionCover& cover) {
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  std::map<Edge, int> seen;
  for (const auto& sec : cover.sections) {
    std::set<int> touched;
    for (const auto& t : sec.tiles) {
      const std::string where = "section " + sec.color + " tile " + to_string(t.kind);
      if (static_cast<int>(t.sites.size()) != tile_size(t.kind)) {
        fail("catalog mismatch: " + where + " has wrong site count");
        continue;
      }
      if (std::set<int>(t.sites.begin(), t.sites.end()).size() != t.sites.size())
        fail("catalog mismatch: " + where + " repeats a site");
      bool sites_ok = true;
      for (int s : t.sites)
        if (s < 0 || s >= g.n_sites()) {
          fail("unknown site " + std::to_string(s) + " in " + where);
          sites_ok = false;
        }
      if (!sites_ok) continue;
      for (int s : t.sites)
        if (!touched.insert(s).second) fail("section overlap: site " + std::to_string(s) + " in " + sec.color);
      for (auto e : t.edges()) {
        if (!g.has_edge(e.first, e.second))
          fail("edge not in lattice: " + std::to_string(e.first) + "-" + std::to_string(e.second));
        else if (++seen[e] == 2)
          fail("duplicate edge: " + std::to_string(e.first) + "-" + std::to_string(e.second));
      }
    }
  }
  for (auto e : g.edges())
    if (!seen.count(e)) fail("uncovered edge: " + std::to_string(e.first) + "-" + std::to_string(e.second));
  return rep;
}

std::vector<std::map<TileKind, int>> cover_tile_census(const SectionCover& cover) {
  std::vector<std::map<TileKind, int>> out;
  for (const auto& sec : cover.sections) {
    std::map<TileKind, int> m;
    for (const auto& t : sec.tiles) ++m[t.kind];
    out.push_back(std::move(m));
  }
  return out;
}

Eigen::MatrixXd section_adjacency(const Section& s, int n_sites) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n_sites, n_sites);
  for (const auto& t : s.tiles)
    for (auto [i, j] : t.edges()) {
      if (i < 0 || j < 0 || i >= n_sites || j >= n_sites)
        throw Error(ErrorKind::dimension_mismatch, "tile site outside lattice");
      r(i, j) = r(j, i) = 1.0;
    }
  return r;
}

}  // namespace tiletrot
