#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tiletrot/lattice.hpp"

namespace tiletrot {

enum class TileKind { S1, S2, C4, S4 };

const char* to_string(TileKind k);
TileKind tile_kind_from_string(const std::string& s);

// Local adjacency with its two nonzero eigenpairs in closed form.
// Column 0 of eigenvectors belongs to lambda_plus, column 1 to lambda_minus.
struct TileTemplate {
  TileKind kind;
  Eigen::MatrixXd adjacency;
  double lambda_plus;
  double lambda_minus;
  Eigen::MatrixXd eigenvectors;
  int n_zero;
};

const TileTemplate& tile_catalog(TileKind kind);
int tile_size(TileKind kind);

struct Tile {
  TileKind kind;
  std::vector<int> sites;  // tile-local JW order

  std::vector<Edge> edges() const;
};

struct Section {
  std::string color;
  std::vector<Tile> tiles;
};

struct SectionCover {
  std::vector<Section> sections;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

// Three sections (blue, red, gold) of N/4 S2 tiles each, from a 2x2-cell motif.
SectionCover cover_periodic_hex(const LatticeGraph& g);

// Three sections of S2/S1 tiles for a hexagonal fragment; see tiling.cpp.
SectionCover cover_hex_fragment(const LatticeGraph& g);

ValidationReport validate_cover(const LatticeGraph& g, const SectionCover& cover);

std::vector<std::map<TileKind, int>> cover_tile_census(const SectionCover& cover);

// N x N adjacency of the hopping terms carried by one section.
Eigen::MatrixXd section_adjacency(const Section& s, int n_sites);

}  // namespace tiletrot
