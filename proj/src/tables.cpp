#include "tiletrot/tables.hpp"

#include <cmath>

namespace tiletrot {

std::vector<Table2Row> compute_table2() {
  using namespace reference;
  const std::array<HwpChoice, 4> hwp = {HwpChoice::off, HwpChoice::quarter, HwpChoice::half, HwpChoice::full};
  std::vector<Table2Row> rows;
  for (int ext = 0; ext < 2; ++ext) {
    const std::string model = ext ? "extended" : "hubbard";
    ModelParams p{ext ? ModelKind::extended_hubbard : ModelKind::hubbard, 1.0, 4.0, ext ? 2.0 : 0.0, {}};
    const auto& w_ref = ext ? kWTileExtended : kWTileHubbard;
    for (std::size_t c = 0; c < kL.size(); ++c) {
      const int l = kL[c];
      const count_t n = 2 * static_cast<count_t>(l) * l;
      rows.push_back({model, "W_tile", "-", l, n, periodic_w_tile(l, p), w_ref[c]});
    }
    const auto& rot_ref = ext ? kRotExtended : kRotHubbard;
    const auto& t_ref = ext ? kTExtended : kTHubbard;
    for (std::size_t h = 0; h < hwp.size(); ++h)
      for (std::size_t c = 0; c < kL.size(); ++c) {
        const int l = kL[c];
        const count_t n = 2 * static_cast<count_t>(l) * l;
        const count_t m = hwp_group_size(hwp[h], n);
        const StepCost s = ext ? step_cost_periodic_extended(n, m) : step_cost_periodic_hubbard(n, m);
        const std::string a = to_string(hwp[h]);
        rows.push_back({model, "N_Q", a, l, n, double(s.n_qubits), double(kQubits[h][c])});
        rows.push_back({model, "N_R", a, l, n, double(s.n_rot), double(rot_ref[h][c])});
        rows.push_back({model, "N_T", a, l, n, double(s.n_t), double(t_ref[h][c])});
      }
  }
  return rows;
}

bool table2_row_matches(const Table2Row& r) {
  if (r.quantity == "W_tile") return std::abs(std::round(r.computed) - r.reference) <= 1.0;
  return r.computed == r.reference;
}

}  // namespace tiletrot
