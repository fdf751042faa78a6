#include "tiletrot/lattice.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <tuple>

#include "tiletrot/error.hpp"

namespace tiletrot {

const char* to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::periodic_hex: return "periodic_hex";
    case LatticeKind::hex_fragment: return "hex_fragment";
    case LatticeKind::square_fragment: return "square_fragment";
    case LatticeKind::custom: return "custom";
  }
  return "custom";
}

const char* to_string(SiteRole r) { return r == SiteRole::center ? "center" : "edge"; }

LatticeKind lattice_kind_from_string(const std::string& s) {
  for (auto k : {LatticeKind::periodic_hex, LatticeKind::hex_fragment, LatticeKind::square_fragment,
                 LatticeKind::custom})
    if (s == to_string(k)) return k;
  throw Error(ErrorKind::unknown_kind, "lattice kind '" + s + "'");
}

namespace {

int bulk_degree(LatticeKind kind, const std::vector<std::vector<int>>& nbrs) {
  switch (kind) {
    case LatticeKind::periodic_hex:
    case LatticeKind::hex_fragment: return 3;
    case LatticeKind::square_fragment: return 4;
    case LatticeKind::custom: break;
  }
  std::size_t d = 0;
  for (const auto& n : nbrs) d = std::max(d, n.size());
  return static_cast<int>(d);
}

}  // namespace

LatticeGraph::LatticeGraph(LatticeKind kind, std::vector<SiteInfo> sites, std::vector<Edge> edges,
                           std::optional<std::pair<int, int>> dims)
    : kind_(kind), sites_(std::move(sites)), dims_(dims) {
  const int n = n_sites();
  if (n == 0) throw Error(ErrorKind::invalid_parameter, "lattice has no sites");
  for (auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw Error(ErrorKind::invalid_parameter, "edge references a missing site");
    if (i == j) throw Error(ErrorKind::invalid_parameter, "self-loop at site " + std::to_string(i));
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorKind::invalid_parameter, "multi-edge in lattice");
  edges_ = std::move(edges);

  adjacency_ = Eigen::MatrixXd::Zero(n, n);
  neighbors_.assign(static_cast<std::size_t>(n), {});
  for (auto [i, j] : edges_) {
    adjacency_(i, j) = adjacency_(j, i) = 1.0;
    neighbors_[static_cast<std::size_t>(i)].push_back(j);
    neighbors_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());

  const int bulk = bulk_degree(kind_, neighbors_);
  for (int i = 0; i < n; ++i)
    sites_[static_cast<std::size_t>(i)].role = degree(i) >= bulk ? SiteRole::center : SiteRole::edge;
}

bool LatticeGraph::has_edge(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_sites() || j >= n_sites()) return false;
  return adjacency_(i, j) != 0.0;
}

int LatticeGraph::count_role(SiteRole r) const {
  return static_cast<int>(std::count_if(sites_.begin(), sites_.end(), [r](const SiteInfo& s) { return s.role == r; }));
}

std::optional<int> LatticeGraph::regular_degree() const {
  const int k = degree(0);
  for (int i = 1; i < n_sites(); ++i)
    if (degree(i) != k) return std::nullopt;
  return k;
}

LatticeGraph build_periodic_hex(int lx, int ly) {
  if (lx < 2 || ly < 2)
    throw Error(ErrorKind::dimension_too_small, "periodic hex needs Lx, Ly >= 2");
  auto idx = [&](int x, int y, int c) {
    x = ((x % lx) + lx) % lx;
    y = ((y % ly) + ly) % ly;
    return 2 * (x + y * lx) + c;
  };
  std::vector<SiteInfo> sites(static_cast<std::size_t>(2 * lx * ly));
  std::vector<Edge> edges;
  for (int y = 0; y < ly; ++y)
    for (int x = 0; x < lx; ++x) {
      for (int c = 0; c < 2; ++c) sites[static_cast<std::size_t>(idx(x, y, c))] = {x, y, c, SiteRole::center};
      const int a = idx(x, y, 0);
      edges.emplace_back(a, idx(x, y, 1));
      edges.emplace_back(a, idx(x - 1, y, 1));
      edges.emplace_back(a, idx(x, y - 1, 1));
    }
  return LatticeGraph(LatticeKind::periodic_hex, std::move(sites), std::move(edges), std::make_pair(lx, ly));
}

namespace {

using SiteKey = std::tuple<int, int, int>;  // (ly, lx, c), the index order

std::vector<SiteKey> hexagon_vertices(Cell h) {
  auto [x, y] = h;
  return {{y, x, 0}, {y, x, 1}, {y, x + 1, 0}, {y - 1, x + 1, 1}, {y - 1, x + 1, 0}, {y - 1, x, 1}};
}

bool cells_connected(const std::vector<Cell>& cells) {
  const std::set<Cell> all(cells.begin(), cells.end());
  std::set<Cell> seen{cells.front()};
  std::queue<Cell> q;
  q.push(cells.front());
  const Cell steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop();
    for (auto [dx, dy] : steps) {
      Cell nb{x + dx, y + dy};
      if (all.count(nb) && seen.insert(nb).second) q.push(nb);
    }
  }
  return seen.size() == all.size();
}

}  // namespace

LatticeGraph build_hex_fragment(const std::vector<Cell>& cells) {
  if (cells.empty()) throw Error(ErrorKind::invalid_fragment, "empty cell list");
  if (std::set<Cell>(cells.begin(), cells.end()).size() != cells.size())
    throw Error(ErrorKind::invalid_fragment, "duplicate hexagon cell");
  if (!cells_connected(cells)) throw Error(ErrorKind::invalid_fragment, "cells do not form a connected patch");

  std::set<SiteKey> keys;
  for (const auto& h : cells)
    for (const auto& v : hexagon_vertices(h)) keys.insert(v);
  std::map<SiteKey, int> index;
  std::vector<SiteInfo> sites;
  for (const auto& k : keys) {
    index[k] = static_cast<int>(sites.size());
    sites.push_back({std::get<1>(k), std::get<0>(k), std::get<2>(k), SiteRole::center});
  }
  std::vector<Edge> edges;
  for (const auto& [k, i] : index) {
    auto [y, x, c] = k;
    if (c != 0) continue;
    for (SiteKey nb : {SiteKey{y, x, 1}, SiteKey{y, x - 1, 1}, SiteKey{y - 1, x, 1}}) {
      auto it = index.find(nb);
      if (it != index.end()) edges.emplace_back(i, it->second);
    }
  }
  return LatticeGraph(LatticeKind::hex_fragment, std::move(sites), std::move(edges));
}

LatticeGraph build_square_fragment(int lx, int ly) {
  if (lx < 2 || ly < 1) throw Error(ErrorKind::dimension_too_small, "square fragment needs Lx >= 2, Ly >= 1");
  std::vector<SiteInfo> sites;
  std::vector<Edge> edges;
  for (int y = 0; y < ly; ++y)
    for (int x = 0; x < lx; ++x) {
      const int i = x + y * lx;
      sites.push_back({x, y, (x + y) % 2, SiteRole::center});
      if (x + 1 < lx) edges.emplace_back(i, i + 1);
      if (y + 1 < ly) edges.emplace_back(i, i + lx);
    }
  return LatticeGraph(LatticeKind::square_fragment, std::move(sites), std::move(edges), std::make_pair(lx, ly));
}

namespace {

LatticeGraph build_path(int n, bool closed) {
  std::vector<SiteInfo> sites;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    sites.push_back({i, 0, i % 2, SiteRole::center});
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  if (closed) edges.emplace_back(0, n - 1);
  return LatticeGraph(LatticeKind::custom, std::move(sites), std::move(edges));
}

}  // namespace

LatticeGraph build_ring(int n) {
  if (n < 3) throw Error(ErrorKind::dimension_too_small, "ring needs at least 3 sites");
  return build_path(n, true);
}

LatticeGraph build_chain(int n) {
  if (n < 2) throw Error(ErrorKind::dimension_too_small, "chain needs at least 2 sites");
  return build_path(n, false);
}

std::map<int, int> degree_histogram(const LatticeGraph& g) {
  std::map<int, int> h;
  for (int i = 0; i < g.n_sites(); ++i) ++h[g.degree(i)];
  return h;
}

std::vector<Cell> rhombus_cells(int a, int b) {
  std::vector<Cell> cells;
  for (int y = 0; y < b; ++y)
    for (int x = 0; x < a; ++x) cells.emplace_back(x, y);
  return cells;
}

std::vector<Cell> fragment_patch_a() { return rhombus_cells(5, 5); }

std::vector<Cell> fragment_patch_b() {
  std::vector<Cell> cells;
  const int rows[] = {1, 4, 5, 4, 1};
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < rows[y]; ++x) cells.emplace_back(x, y);
  return cells;
}

}  // namespace tiletrot
