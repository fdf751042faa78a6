#include "tiletrot/qpe.hpp"

#include <cmath>

#include "tiletrot/error.hpp"
#include "tiletrot/lattice.hpp"
#include "tiletrot/tiling.hpp"

namespace tiletrot {

double trotter_total_t(const StepCost& step, double w, double eps, double x) {
  const double n_pe = kNpeConst * std::sqrt(w) / (std::pow(1.0 - x, 1.5) * std::pow(eps, 1.5));
  double n_rt = 0.0;
  if (step.n_rot > 0) {
    const double nr = static_cast<double>(step.n_rot);
    n_rt = nr * (kSynthSlope * std::log2(nr * std::sqrt(3.0 * w) / (x * std::sqrt(1.0 - x) * std::pow(eps, 1.5))) +
                 kSynthOffset);
  }
  return n_pe * (n_rt + static_cast<double>(step.n_t));
}

namespace {

double optimise_x(const StepCost& step, double w, double eps) {
  constexpr int kGrid = 200;
  constexpr double lo = 1e-4, hi = 0.5;
  std::vector<double> xs(kGrid);
  int best = 0;
  double best_v = INFINITY;
  for (int i = 0; i < kGrid; ++i) {
    xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (kGrid - 1));
    const double v = trotter_total_t(step, w, eps, xs[i]);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  double a = xs[std::max(best - 1, 0)], b = xs[std::min(best + 1, kGrid - 1)];
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = trotter_total_t(step, w, eps, c), fd = trotter_total_t(step, w, eps, d);
  for (int it = 0; it < 100 && (b - a) > 1e-12 * b; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = trotter_total_t(step, w, eps, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = trotter_total_t(step, w, eps, d);
    }
  }
  const double xm = 0.5 * (a + b);
  return trotter_total_t(step, w, eps, xm) <= best_v ? xm : xs[best];
}

}  // namespace

QpeEstimate trotter_qpe(const StepCost& step, double w, double eps, std::optional<double> x) {
  if (!(eps > 0.0)) throw Error(ErrorKind::invalid_parameter, "eps must be positive");
  if (!(w > 0.0)) throw Error(ErrorKind::invalid_parameter, "W must be positive");
  if (x && !(*x > 0.0 && *x < 1.0)) throw Error(ErrorKind::invalid_parameter, "x must lie in (0,1)");
  QpeEstimate q;
  q.method = QpeMethod::trotter;
  q.eps = eps;
  q.w = w;
  q.x = x ? *x : optimise_x(step, w, eps);
  q.step_rot = step.n_rot;
  q.step_t = step.n_t;
  q.n_pe = kNpeConst * std::sqrt(w) / (std::pow(1.0 - q.x, 1.5) * std::pow(eps, 1.5));
  q.total_t = trotter_total_t(step, w, eps, q.x);
  q.n_rt = q.total_t / q.n_pe - static_cast<double>(step.n_t);
  q.total_rot = q.n_pe * static_cast<double>(step.n_rot);
  q.n_qubits = step.n_qubits + 2;
  return q;
}

QpeEstimate qubitized_qpe(const WalkCosts& walk, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::invalid_parameter, "eps must be positive");
  QpeEstimate q;
  q.method = QpeMethod::qubitized;
  q.eps = eps;
  q.lambda = walk.lambda;
  q.n_w = static_cast<count_t>(std::ceil(M_PI * walk.lambda / (2.0 * eps)));
  q.per_walk_t = walk.per_walk_t();
  q.total_t = static_cast<double>(q.n_w * q.per_walk_t + 4 * q.n_w - 4);
  q.total_rot = static_cast<double>(q.n_w * kWalkRotations);
  q.alpha_pe = 2 * ceil_log2(q.n_w + 1) - 1;
  q.n_qubits = walk.n_qubits_walk + q.alpha_pe;
  return q;
}

count_t hwp_group_size(HwpChoice c, count_t n) {
  switch (c) {
    case HwpChoice::off: return 1;
    case HwpChoice::quarter: return n / 4;
    case HwpChoice::half: return n / 2;
    case HwpChoice::full: return n;
  }
  return 1;
}

const char* to_string(HwpChoice c) {
  switch (c) {
    case HwpChoice::off: return "0";
    case HwpChoice::quarter: return "N/4-1";
    case HwpChoice::half: return "N/2-1";
    case HwpChoice::full: return "N-1";
  }
  return "?";
}

double periodic_w_tile(int l, const ModelParams& p) {
  const auto g = build_periodic_hex(l, l);
  const auto cover = cover_periodic_hex(g);
  return w_tile(g, cover, p).w_tile;
}

std::vector<SweepRow> crossover_sweep(const SweepConfig& cfg, const std::function<double(int)>& w_of_l) {
  std::vector<SweepRow> rows;
  for (int l : cfg.l_values) {
    const count_t n = 2 * static_cast<count_t>(l) * l;
    const double eps = cfg.eps_rule == EpsRule::fixed ? cfg.eps : cfg.eps * static_cast<double>(n);
    const double w = w_of_l ? w_of_l(l) : periodic_w_tile(l, cfg.params);
    for (auto h : cfg.hwp) {
      const count_t m = hwp_group_size(h, n);
      const StepCost step = cfg.params.model == ModelKind::extended_hubbard ? step_cost_periodic_extended(n, m)
                                                                             : step_cost_periodic_hubbard(n, m);
      const auto q = trotter_qpe(step, w, eps);
      rows.push_back({m == 1 ? "trotter" : "trotter-hwp", n, l, eps, q.x, m - 1, q.total_t, q.total_rot, q.n_qubits,
                      q.n_pe, w});
    }
    if (cfg.qubitized) {
      const auto walk = walk_costs(l, cfg.params.tau, cfg.params.U, cfg.theta, cfg.gamma);
      const auto q = qubitized_qpe(walk, eps);
      rows.push_back({"qubitized", n, l, eps, 0.0, 0, q.total_t, q.total_rot, q.n_qubits,
                      static_cast<double>(q.n_w), q.lambda});
    }
  }
  return rows;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorKind::invalid_parameter, "slope needs >= 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace tiletrot
