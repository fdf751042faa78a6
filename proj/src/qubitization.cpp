#include "tiletrot/qubitization.hpp"

#include <bit>

#include "tiletrot/error.hpp"

namespace tiletrot {

count_t ceil_log2(count_t x) {
  if (x < 1) throw Error(ErrorKind::invalid_parameter, "ceil_log2 of a non-positive value");
  return x == 1 ? 0 : static_cast<count_t>(std::bit_width(static_cast<std::uint64_t>(x - 1)));
}

count_t two_adic_valuation(count_t l) {
  if (l < 1) throw Error(ErrorKind::invalid_parameter, "valuation of a non-positive value");
  return std::countr_zero(static_cast<std::uint64_t>(l));
}

double lambda_hubbard(count_t n_sites, double tau, double U) { return (3.0 * tau + U / 4.0) * n_sites; }

count_t select_toffoli(count_t lx, count_t ly) { return 10 * lx * ly - 1; }

count_t select_cost(count_t lx, count_t ly) {
  if (lx < 2 || ly < 2) throw Error(ErrorKind::dimension_too_small, "SELECT needs Lx, Ly >= 2");
  return 40 * lx * ly - 4;
}

count_t prepare_cost(count_t l, count_t theta, count_t gamma) {
  if (l < 2) throw Error(ErrorKind::dimension_too_small, "PREPARE needs L >= 2");
  return 46 * ceil_log2(l) + 4 * theta + 4 * gamma - 24 * two_adic_valuation(l) - 16;
}

count_t reflection_cost(count_t l) {
  if (l < 2) throw Error(ErrorKind::dimension_too_small, "reflection needs L >= 2");
  return 32 * ceil_log2(l) + 77;
}

count_t ledger_ancillas(count_t l) { return 2 * ceil_log2(l) + 9; }
count_t ledger_flags(count_t l) { return 4 * ceil_log2(l) + 6; }

count_t walk_qubits(count_t l, count_t n_sites) { return 2 * n_sites + 6 * ceil_log2(l) + 15; }

std::vector<LedgerRow> element_ledger(count_t l, count_t theta, count_t gamma) {
  const count_t c = ceil_log2(l), eta = two_adic_valuation(l);
  std::vector<LedgerRow> rows;
  rows.push_back({"controlled SELECT", select_toffoli(l, l), select_cost(l, l), 2 * c + 3, false});
  for (const char* axis : {"UNIFORM x", "UNIFORM y"}) {
    const count_t raw = 3 * c - 3 * eta - 3;
    const count_t tof = raw < 0 ? 0 : raw;
    rows.push_back({axis, tof, kTPerToffoli * tof + 2 * theta, c - eta + 2, raw < 0});
  }
  rows.push_back({"concat success qubits", 1, 4, 1, false});
  rows.push_back({"controlled Hadamard", 1, 4, 2, false});
  rows.push_back({"controlled -1 on q_x", c, 4 * c, c, false});
  rows.push_back({"controlled -1 on q_y", c, 4 * c, c, false});
  rows.push_back({"two controlled swaps", 2 * c, 14 * c, 0, false});
  rows.push_back({"R_Y", 0, gamma, 1, false});
  rows.push_back({"PREP_00+01+10", 0, 3 * gamma, 1, false});
  const count_t refl_tof = 2 * (4 * c + 10) - 3;
  rows.push_back({"reflection", refl_tof, kTPerToffoli * refl_tof, 1, false});
  return rows;
}

count_t ledger_prepare_t(const std::vector<LedgerRow>& ledger) {
  count_t sum = 0;
  for (const auto& r : ledger)
    if (r.element != "controlled SELECT" && r.element != "reflection") sum += r.t;
  return sum;
}

count_t ledger_reflection_t(const std::vector<LedgerRow>& ledger) {
  for (const auto& r : ledger)
    if (r.element == "reflection") return r.t;
  return 0;
}

WalkCosts walk_costs(count_t l, double tau, double U, count_t theta, count_t gamma) {
  WalkCosts w;
  w.theta = theta;
  w.gamma = gamma;
  w.c_select = select_cost(l, l);
  w.c_prepare = prepare_cost(l, theta, gamma);
  w.c_reflect = reflection_cost(l);
  const count_t n = 2 * l * l;
  w.lambda = lambda_hubbard(n, tau, U);
  w.n_qubits_walk = walk_qubits(l, n);
  w.element_ledger = element_ledger(l, theta, gamma);
  for (const auto& r : w.element_ledger)
    if (r.clamped)
      w.warnings.push_back(r.element + " Toffoli count is negative for L=" + std::to_string(l) + "; clamped to 0");
  const count_t lp = ledger_prepare_t(w.element_ledger);
  if (lp != w.c_prepare)
    w.warnings.push_back("PREPARE ledger sums to " + std::to_string(lp) + " T, headline is " +
                         std::to_string(w.c_prepare));
  const count_t lr = ledger_reflection_t(w.element_ledger);
  if (lr != w.c_reflect)
    w.warnings.push_back("reflection ledger gives " + std::to_string(lr) + " T, headline is " +
                         std::to_string(w.c_reflect) + " (difference " + std::to_string(w.c_reflect - lr) + ")");
  return w;
}

}  // namespace tiletrot
