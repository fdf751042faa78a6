#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tiletrot/gatecount.hpp"
#include "tiletrot/qubitization.hpp"
#include "tiletrot/trotterbounds.hpp"

namespace tiletrot {

enum class QpeMethod { trotter, qubitized };

struct QpeEstimate {
  QpeMethod method = QpeMethod::trotter;
  double total_t = 0.0;
  double total_rot = 0.0;
  count_t n_qubits = 0;
  double eps = 0.0;
  double x = 0.0;  // trotter only

  double n_pe = 0.0;  // continuous, not rounded
  double n_rt = 0.0;
  double w = 0.0;
  count_t step_rot = 0;
  count_t step_t = 0;

  double lambda = 0.0;
  count_t n_w = 0;
  count_t per_walk_t = 0;
  count_t alpha_pe = 0;
};

inline constexpr double kNpeConst = 6.203;
inline constexpr double kSynthSlope = 1.15;
inline constexpr double kSynthOffset = 9.2;
// Rotations per walk: PREPARE and its inverse, each 2 + 2 UNIFORM plus R_Y and 3 PREP rotations.
inline constexpr count_t kWalkRotations = 16;

double trotter_total_t(const StepCost& step, double w, double eps, double x);

// x optimised on a 200-point geometric grid over [1e-4, 0.5] refined by golden section when absent.
QpeEstimate trotter_qpe(const StepCost& step, double w, double eps, std::optional<double> x = std::nullopt);

QpeEstimate qubitized_qpe(const WalkCosts& walk, double eps);

enum class EpsRule { fixed, per_site };

// HWP group size as a fraction of N: 0 means HWP off.
enum class HwpChoice { off, quarter, half, full };
count_t hwp_group_size(HwpChoice c, count_t n_sites);
const char* to_string(HwpChoice c);

struct SweepConfig {
  ModelParams params;
  std::vector<int> l_values{4, 6, 8, 10, 12, 14, 16, 18};
  EpsRule eps_rule = EpsRule::fixed;
  double eps = 0.05;  // energy for fixed, coefficient c in eps = c N for per_site
  std::vector<HwpChoice> hwp{HwpChoice::off, HwpChoice::quarter, HwpChoice::half, HwpChoice::full};
  bool qubitized = true;
  count_t theta = 10;
  count_t gamma = 40;
};

struct SweepRow {
  std::string method;  // trotter, trotter-hwp, qubitized
  count_t n_sites = 0;
  count_t l = 0;
  double eps = 0.0;
  double x = 0.0;
  count_t alpha = 0;
  double total_t = 0.0;
  double total_rot = 0.0;
  count_t n_qubits = 0;
  double n_pe_or_nw = 0.0;
  double w_or_lambda = 0.0;
};

// W_tile of the periodic L x L lattice for the configured model.
double periodic_w_tile(int l, const ModelParams& p);

std::vector<SweepRow> crossover_sweep(const SweepConfig& cfg,
                                      const std::function<double(int)>& w_of_l = nullptr);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tiletrot
