#pragma once

#include <string>
#include <vector>

#include "tiletrot/gatecount.hpp"

namespace tiletrot {

struct LedgerRow {
  std::string element;
  count_t toffoli = 0;
  count_t t = 0;  // includes 4 T per Toffoli and rotation synthesis
  count_t ancilla = 0;
  bool clamped = false;
};

struct WalkCosts {
  count_t c_select = 0;
  count_t c_prepare = 0;
  count_t c_reflect = 0;
  double lambda = 0.0;
  count_t n_qubits_walk = 0;
  count_t theta = 10;
  count_t gamma = 40;
  std::vector<LedgerRow> element_ledger;
  std::vector<std::string> warnings;

  count_t per_walk_t() const { return c_select + 2 * c_prepare + c_reflect; }
};

count_t ceil_log2(count_t x);
// Exponent of the largest power of two dividing L.
count_t two_adic_valuation(count_t l);

double lambda_hubbard(count_t n_sites, double tau, double U);
count_t select_cost(count_t lx, count_t ly);
count_t select_toffoli(count_t lx, count_t ly);
count_t prepare_cost(count_t l, count_t theta = 10, count_t gamma = 40);
count_t reflection_cost(count_t l);
count_t walk_qubits(count_t l, count_t n_sites);

// Per-element records for an L x L lattice; PREPARE rows are clamped at zero.
std::vector<LedgerRow> element_ledger(count_t l, count_t theta = 10, count_t gamma = 40);

// Sum of the PREPARE rows of the ledger.
count_t ledger_prepare_t(const std::vector<LedgerRow>& ledger);
count_t ledger_reflection_t(const std::vector<LedgerRow>& ledger);
count_t ledger_ancillas(count_t l);
count_t ledger_flags(count_t l);

WalkCosts walk_costs(count_t l, double tau, double U, count_t theta = 10, count_t gamma = 40);

}  // namespace tiletrot
