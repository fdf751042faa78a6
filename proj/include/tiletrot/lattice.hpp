#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tiletrot {

enum class LatticeKind { periodic_hex, hex_fragment, square_fragment, custom };
enum class SiteRole { center, edge };

const char* to_string(LatticeKind k);
const char* to_string(SiteRole r);
LatticeKind lattice_kind_from_string(const std::string& s);

struct SiteInfo {
  int l_x = 0;
  int l_y = 0;
  int color = 0;
  SiteRole role = SiteRole::center;
};

using Edge = std::pair<int, int>;
using Cell = std::pair<int, int>;

// Immutable undirected simple graph. Roles are derived from degree: a site is
// a center when its degree equals the bulk degree of the lattice kind.
class LatticeGraph {
 public:
  LatticeGraph(LatticeKind kind, std::vector<SiteInfo> sites, std::vector<Edge> edges,
               std::optional<std::pair<int, int>> dims = std::nullopt);

  int n_sites() const { return static_cast<int>(sites_.size()); }
  LatticeKind kind() const { return kind_; }
  const std::optional<std::pair<int, int>>& dims() const { return dims_; }
  const Eigen::MatrixXd& adjacency() const { return adjacency_; }
  const SiteInfo& site(int i) const { return sites_.at(static_cast<std::size_t>(i)); }
  const std::vector<SiteInfo>& sites() const { return sites_; }
  // Sorted lexicographically with i < j.
  const std::vector<Edge>& edges() const { return edges_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  int degree(int i) const { return static_cast<int>(neighbors_.at(static_cast<std::size_t>(i)).size()); }
  const std::vector<int>& neighbors(int i) const { return neighbors_.at(static_cast<std::size_t>(i)); }
  bool has_edge(int i, int j) const;
  int count_role(SiteRole r) const;
  // k when every site has degree k.
  std::optional<int> regular_degree() const;

 private:
  LatticeKind kind_;
  std::vector<SiteInfo> sites_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  Eigen::MatrixXd adjacency_;
  std::optional<std::pair<int, int>> dims_;
};

// Brick-wall honeycomb on an Lx x Ly torus, site i = 2(lx + ly Lx) + c.
// Site (lx,ly,0) bonds to (lx,ly,1), (lx-1,ly,1) and (lx,ly-1,1).
LatticeGraph build_periodic_hex(int lx, int ly);

// Induced subgraph of the infinite honeycomb spanned by the listed hexagons.
// Hexagon (hx,hy) has vertices A(hx,hy) B(hx,hy) A(hx+1,hy) B(hx+1,hy-1)
// A(hx+1,hy-1) B(hx,hy-1), with A = color 0 and B = color 1.
LatticeGraph build_hex_fragment(const std::vector<Cell>& cells);

// Open Lx x Ly square grid, site i = lx + ly Lx.
LatticeGraph build_square_fragment(int lx, int ly);

// Cycle of n >= 3 sites and open chain of n >= 2 sites, both of kind custom.
LatticeGraph build_ring(int n);
LatticeGraph build_chain(int n);

std::map<int, int> degree_histogram(const LatticeGraph& g);

// Cell lists of two nanographene-like patches used throughout the tests.
std::vector<Cell> rhombus_cells(int a, int b);
std::vector<Cell> fragment_patch_a();
std::vector<Cell> fragment_patch_b();

}  // namespace tiletrot
