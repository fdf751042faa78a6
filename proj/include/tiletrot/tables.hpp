#pragma once

#include <array>
#include <string>
#include <vector>

#include "tiletrot/gatecount.hpp"
#include "tiletrot/qpe.hpp"
#include "tiletrot/trotterbounds.hpp"

namespace tiletrot {

// Reference per-step resources for periodic L x L honeycombs, L = 4, 6, ..., 18,
// at U = 4, V = 2, tau = 1.
namespace reference {

inline constexpr std::array<int, 8> kL = {4, 6, 8, 10, 12, 14, 16, 18};

inline constexpr std::array<double, 8> kWTileHubbard = {215, 483, 860, 1344, 1934, 2634, 3439, 4353};
inline constexpr std::array<double, 8> kWTileExtended = {1223, 2752, 4894, 7648, 11011, 14989, 19577, 24778};

// Indexed [hwp choice][L]; hwp order off, N/4-1, N/2-1, N-1.
using Grid = std::array<std::array<count_t, 8>, 4>;

inline constexpr Grid kQubits = {{{64, 144, 256, 400, 576, 784, 1024, 1296},
                                  {71, 161, 287, 449, 647, 881, 1151, 1457},
                                  {79, 179, 319, 499, 719, 979, 1279, 1619},
                                  {95, 215, 383, 599, 863, 1175, 1535, 1943}}};

inline constexpr Grid kRotHubbard = {{{192, 432, 768, 1200, 1728, 2352, 3072, 3888},
                                      {96, 120, 144, 144, 168, 168, 192, 192},
                                      {60, 72, 84, 84, 96, 96, 108, 108},
                                      {36, 42, 48, 48, 54, 54, 60, 60}}};

inline constexpr Grid kTHubbard = {{{320, 720, 1280, 2000, 2880, 3920, 5120, 6480},
                                    {992, 2352, 4256, 6704, 9696, 13232, 17312, 21936},
                                    {1040, 2400, 4304, 6752, 9744, 13280, 17360, 21984},
                                    {1064, 2424, 4328, 6776, 9768, 13304, 17384, 22008}}};

inline constexpr Grid kRotExtended = {{{384, 864, 1536, 2400, 3456, 4704, 6144, 7776},
                                       {192, 240, 288, 288, 336, 336, 384, 384},
                                       {120, 144, 168, 168, 192, 192, 216, 216},
                                       {72, 84, 96, 96, 108, 108, 120, 120}}};

inline constexpr Grid kTExtended = {{{320, 720, 1280, 2000, 2880, 3920, 5120, 6480},
                                     {1664, 3984, 7232, 11408, 16512, 22544, 29504, 37392},
                                     {1760, 4080, 7328, 11504, 16608, 22640, 29600, 37488},
                                     {1808, 4128, 7376, 11552, 16656, 22688, 29648, 37536}}};

}  // namespace reference

struct Table2Row {
  std::string model;     // hubbard or extended
  std::string quantity;  // W_tile, N_Q, N_R, N_T
  std::string alpha;     // "-" for W_tile
  int l = 0;
  count_t n_sites = 0;
  double computed = 0.0;
  double reference = 0.0;

  double diff() const { return computed - reference; }
};

// Every entry of the table at U = 4, V = 2, tau = 1; computed values unrounded.
std::vector<Table2Row> compute_table2();

// Rounded W_tile within +-1 of the reference and gate counts equal.
bool table2_row_matches(const Table2Row& r);

}  // namespace tiletrot
