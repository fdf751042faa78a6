// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tiletrot/oracle.hpp"
#include "tiletrot/qpe.hpp"
#include "tiletrot/tables.hpp"

using namespace tiletrot;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      fails_ << (fails_.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }
  Outcome done() const {
    std::string d = notes_.str();
    if (!pass_) d += (d.empty() ? "" : " | ") + std::string("failed: ") + fails_.str();
    return {pass_, d};
  }

 private:
  bool pass_ = true;
  std::ostringstream fails_, notes_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ModelParams hubbard() { return {ModelKind::hubbard, 1.0, 4.0, 0.0, {}}; }
ModelParams extended(double U = 4.0, double V = 2.0) { return {ModelKind::extended_hubbard, 1.0, U, V, {}}; }

Outcome table2() {
  Notes n;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = compute_table2();
  const double secs = elapsed(t0);
  int bad = 0;
  for (const auto& r : rows)
    if (!table2_row_matches(r)) {
      ++bad;
      n.check(false, r.model + " " + r.quantity + " alpha=" + r.alpha + " N=" + std::to_string(r.n_sites));
    }
  // W_tile per model and L, then N_Q, N_R, N_T per model, HWP choice and L.
  n.check(rows.size() == 2 * 8 + 2 * 3 * 4 * 8, "row count " + std::to_string(rows.size()));
  n.note(std::to_string(rows.size() - static_cast<std::size_t>(bad)) + "/" + std::to_string(rows.size()) +
         " rows match");
  n.note("runtime " + fmt("%.1f s", secs));
  n.check(secs < 60.0, "runtime over 60 s");
  return n.done();
}

// Closed forms written out here rather than taken from gatecount.
Outcome hwp_rows() {
  Notes n;
  int checked = 0;
  for (std::size_t li = 0; li < reference::kL.size(); ++li) {
    const count_t N = 2 * reference::kL[li] * reference::kL[li];
    for (int h = 1; h < 4; ++h) {
      const count_t m = h == 1 ? N / 4 : h == 2 ? N / 2 : N;
      const count_t bits = static_cast<count_t>(std::floor(std::log2(static_cast<double>(m)) + 1));
      for (int model = 0; model < 2; ++model) {
        const count_t layers = model == 0 ? 6 : 12;
        const count_t rot = layers * N / m * bits;
        const count_t t = 10 * N + 4 * layers * N / m * (m - 1);
        const count_t q = 2 * N + m - 1;
        const auto& rr = model == 0 ? reference::kRotHubbard : reference::kRotExtended;
        const auto& rt = model == 0 ? reference::kTHubbard : reference::kTExtended;
        const auto lib = model == 0 ? step_cost_periodic_hubbard(N, m) : step_cost_periodic_extended(N, m);
        const std::string where = (model == 0 ? "hubbard" : "extended") + std::string(" N=") + std::to_string(N) +
                                  " alpha=" + std::to_string(m - 1);
        n.check(rot == rr[h][li] && lib.n_rot == rot, where + " N_R");
        n.check(t == rt[h][li] && lib.n_t == t, where + " N_T");
        n.check(q == reference::kQubits[h][li] && lib.n_qubits == q, where + " N_Q");
        checked += 3;
      }
    }
  }
  const auto e = step_cost_periodic_extended(32, 32);
  n.note(std::to_string(checked) + " HWP entries");
  n.note("extended N=32 alpha=31: N_R=" + std::to_string(e.n_rot) + " N_T=" + std::to_string(e.n_t));
  return n.done();
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
  const double k = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / k;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / k;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy * sxy / (sxx * syy);
}

Outcome wh_fractions() {
  Notes n;
  std::vector<double> ns, wh;
  double hmin = 100, hmax = 0, emin = 100, emax = 0;
  for (int l : reference::kL) {
    const auto g = build_periodic_hex(l, l);
    const auto c = cover_periodic_hex(g);
    const auto h = w_tile(g, c, hubbard());
    const auto e = w_tile(g, c, extended());
    const double fh = 100 * h.w_h / h.w_tile, fe = 100 * e.w_h / e.w_tile;
    hmin = std::min(hmin, fh);
    hmax = std::max(hmax, fh);
    emin = std::min(emin, fe);
    emax = std::max(emax, fe);
    n.check(std::abs(fh - 12.6) <= 0.3, "hubbard L=" + std::to_string(l) + " " + fmt("%.2f%%", fh));
    n.check(std::abs(fe - 2.2) <= 0.2, "extended L=" + std::to_string(l) + " " + fmt("%.2f%%", fe));
    ns.push_back(g.n_sites());
    wh.push_back(h.w_h);
  }
  const double r2 = r_squared(ns, wh);
  n.check(r2 > 0.999, "W_h linear fit R^2 " + fmt("%.6f", r2));
  n.note("hubbard W_h share " + fmt("%.2f", hmin) + fmt("..%.2f%%", hmax));
  n.note("extended " + fmt("%.2f", emin) + fmt("..%.2f%%", emax));
  n.note("W_h vs N R^2=" + fmt("%.7f", r2));
  return n.done();
}

Outcome qubitization() {
  Notes n;
  n.check(select_cost(4, 4) == 636, "C_S(4,4)");
  n.check(reflection_cost(4) == 141, "C_R(4)");
  n.check(prepare_cost(4, 10, 40) == 228, "C_P(4;10,40)");
  n.check(walk_qubits(4, 32) == 91, "qubits(4)");
  int reconciled = 0, clamped = 0;
  for (count_t l = 2; l <= 64; ++l) {
    const auto ledger = element_ledger(l, 10, 40);
    if ((l & (l - 1)) == 0) {
      ++clamped;
      continue;
    }
    n.check(ledger_prepare_t(ledger) == prepare_cost(l, 10, 40), "ledger L=" + std::to_string(l));
    ++reconciled;
  }
  const auto w = walk_costs(4, 1.0, 4.0);
  const count_t gap = w.c_reflect - ledger_reflection_t(w.element_ledger);
  n.check(gap == 9, "reflection gap");
  bool warned = false;
  for (const auto& s : w.warnings) warned |= s.find("difference 9") != std::string::npos;
  n.check(warned, "reflection gap not reported");
  n.note("C_S=636 C_R=141 C_P=228 qubits=91");
  n.note("ledger reconciles for " + std::to_string(reconciled) + " L values (" + std::to_string(clamped) +
         " powers of two clamped and reported)");
  n.note("reflection headline exceeds the ledger row by " + std::to_string(gap) + " T (reported)");
  return n.done();
}

Outcome scaling() {
  Notes n;
  SweepConfig cfg;
  cfg.params = hubbard();
  cfg.l_values = {8, 10, 12, 14, 16, 18};
  cfg.eps = 0.05;
  cfg.hwp = {HwpChoice::half};
  const auto rows = crossover_sweep(cfg);
  std::vector<double> nh, th, nq, tq;
  for (const auto& r : rows) {
    (r.method == "qubitized" ? nq : nh).push_back(static_cast<double>(r.n_sites));
    (r.method == "qubitized" ? tq : th).push_back(r.total_t);
  }
  const double sh = loglog_slope(nh, th), sq = loglog_slope(nq, tq);
  n.check(std::abs(sh - 1.5) <= 0.1, "Trotter-HWP exponent " + fmt("%.3f", sh) + " (want 1.5 +- 0.1)");
  n.check(std::abs(sq - 2.0) <= 0.1, "qubitized exponent " + fmt("%.3f", sq) + " (want 2.0 +- 0.1)");
  n.note("exponents over N=128..648 at eps=0.05: Trotter-HWP " + fmt("%.3f", sh) + ", qubitized " + fmt("%.3f", sq));

  SweepConfig plateau = cfg;
  plateau.l_values = {18};
  plateau.eps_rule = EpsRule::per_site;
  plateau.eps = 0.005;
  plateau.qubitized = false;
  const double ph = crossover_sweep(plateau).front().total_t;
  plateau.params = extended();
  const double pe = crossover_sweep(plateau).front().total_t;
  n.check(std::abs(ph / 1.8e6 - 1) <= 0.15, "hubbard plateau " + fmt("%.3g", ph));
  n.check(std::abs(pe / 7e6 - 1) <= 0.15, "extended plateau " + fmt("%.3g", pe));
  n.note("eps=0.005N at N=648: hubbard " + fmt("%.3g", ph) + ", extended " + fmt("%.3g", pe));

  SweepConfig cross = cfg;
  cross.l_values = {4, 6, 8, 10, 12, 14, 16, 18};
  cross.eps = 0.26;
  const auto cr = crossover_sweep(cross);
  bool hwp_wins = true;
  for (std::size_t i = 0; i + 1 < cr.size(); i += 2)
    if (cr[i].n_sites >= 128) hwp_wins &= cr[i].total_t < cr[i + 1].total_t;
  n.check(hwp_wins, "Trotter-HWP not cheaper for all N >= 128 at eps=0.26");
  cross.eps = 0.05;
  cross.l_values = {4, 18};
  const auto tight = crossover_sweep(cross);
  const bool small_q = tight[1].total_t < tight[0].total_t;
  const bool large_h = tight[2].total_t < tight[3].total_t;
  n.check(small_q && large_h, "crossover shape at eps=0.05");
  n.note(std::string("crossover: HWP cheaper for all N>=128 at eps=0.26 ") + (hwp_wins ? "yes" : "no") +
         ", qubitization cheaper at N=32 " + (small_q ? "yes" : "no"));
  return n.done();
}

Outcome tiles() {
  Notes n;
  double worst = 0.0;
  for (auto k : {TileKind::S1, TileKind::S2, TileKind::C4, TileKind::S4})
    for (double t : {0.1, 0.5, 1.0}) {
      const double d = verify_tile_evolution(k, 1.0, t);
      worst = std::max(worst, d);
      n.check(d <= 1e-10, std::string(to_string(k)) + " t=" + fmt("%g", t));
    }
  n.note("12 tile evolutions, max deviation " + fmt("%.2e", worst));
  return n.done();
}

Outcome bounds() {
  Notes n;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, LatticeGraph>> lattices = {
      {"ring N=4", build_ring(4)}, {"ring N=6", build_ring(6)}, {"hexagon", build_hex_fragment({{0, 0}})}};
  int rows = 0;
  double worst = 0.0;
  for (const auto& [name, g] : lattices)
    for (double u : {0.0, 2.0, 4.0})
      for (double v : {0.0, 2.0, 4.0})
        for (const auto& c : verify_commutator_bounds(g, extended(u, v), name)) {
          ++rows;
          if (c.bound > 0) worst = std::max(worst, c.exact / c.bound);
          n.check(c.pass, c.check + " [" + name + fmt(" U=%g", u) + fmt(" V=%g]", v));
        }
  const double secs = elapsed(t0);
  n.check(secs < 600, "runtime");
  n.note(std::to_string(rows) + " exact-vs-bound rows, max ratio " + fmt("%.4f", worst) + ", " +
         fmt("%.1f s", secs));
  return n.done();
}

Outcome trotter_step() {
  Notes n;
  const auto hex = build_hex_fragment({{0, 0}});
  const auto cover = cover_hex_fragment(hex);
  for (const auto& [name, p] : std::vector<std::pair<std::string, ModelParams>>{
           {"hubbard U=4", hubbard()}, {"extended U=4 V=2", extended()}}) {
    const auto r = verify_trotter_step(hex, cover, p, {0.05, 0.1, 0.2}, name);
    for (const auto& c : r) n.check(c.pass, c.check + " [" + name + "]");
    n.note(name + ": error/bound at t=0.2 " + fmt("%.3f", r[2].exact / r[2].bound) + ", error/t^3 spread " +
           fmt("%.3f", r.back().exact));
  }
  return n.done();
}

Outcome identities() {
  Notes n;
  // Shifts against the closed forms as usually quoted.
  struct Case {
    LatticeGraph g;
    int eta;
    std::string name;
  };
  std::vector<Case> cases;
  for (int eta : {0, 2, 4, 8}) cases.push_back({build_ring(4), eta, "ring N=4"});
  cases.push_back({build_ring(6), 6, "ring N=6"});
  int onsite_ok = 0, nn_quoted_ok = 0, nn_rederived_ok = 0;
  for (const auto& c : cases) {
    const auto p = extended(4.0, 2.0);
    const int N = c.g.n_sites(), k = *c.g.regular_degree();
    const auto sector = particle_sector(2 * N, c.eta);
    const auto mi = measure_shift(jw_hamiltonian(c.g, p, Piece::H_I).matrix, jw_onsite_unshifted(c.g, p.U).matrix,
                                  sector);
    const auto mv =
        measure_shift(jw_hamiltonian(c.g, p, Piece::H_V).matrix, jw_nn_unshifted(c.g, p.V).matrix, sector);
    const bool oi = mi.nonscalar <= 1e-10 && std::abs(mi.offset - delta_e_onsite(p.U, N, c.eta)) <= 1e-10;
    const bool ov = mv.nonscalar <= 1e-10 && std::abs(mv.offset - delta_e_nn_quoted(p.V, k, N, c.eta)) <= 1e-10;
    onsite_ok += oi;
    nn_quoted_ok += ov;
    nn_rederived_ok += mv.nonscalar <= 1e-10 && std::abs(mv.offset - delta_e_nn(p.V, k, N, c.eta)) <= 1e-10;
    const std::string where = c.name + " eta=" + std::to_string(c.eta);
    n.check(oi, "onsite shift " + where);
    n.check(ov, "nearest-neighbour shift " + where + ": measured " + fmt("%g", mv.offset) + ", quoted form " +
                    fmt("%g", delta_e_nn_quoted(p.V, k, N, c.eta)));
  }
  const auto chain = verify_chemical_shifts(build_chain(2), hubbard(), 1, "chain N=2");
  n.check(all_pass(chain), "onsite shift chain N=2");
  const auto rules = verify_commutator_rules();
  n.check(all_pass(rules), "commutator rules");
  int ff_rows = 0;
  std::vector<std::pair<std::string, LatticeGraph>> small;
  for (int s = 2; s <= 6; ++s) small.push_back({"chain N=" + std::to_string(s), build_chain(s)});
  for (int s = 3; s <= 6; ++s) small.push_back({"ring N=" + std::to_string(s), build_ring(s)});
  small.push_back({"hexagon", build_hex_fragment({{0, 0}})});
  small.push_back({"square 3x2", build_square_fragment(3, 2)});
  for (const auto& [name, g] : small)
    for (const auto& c : verify_ff_norm(g, 1.0, name)) {
      ++ff_rows;
      n.check(c.pass, c.check + " [" + name + "]");
    }
  const int total = static_cast<int>(cases.size());
  n.note("onsite shift " + std::to_string(onsite_ok + 1) + "/" + std::to_string(total + 1));
  n.note("nearest-neighbour shift vs quoted form " + std::to_string(nn_quoted_ok) + "/" + std::to_string(total) +
         ", vs (Vk/2)(N-2eta) " + std::to_string(nn_rederived_ok) + "/" + std::to_string(total));
  n.note("4 commutator rules exact");
  n.note(std::to_string(ff_rows) + " free-fermion norm rows");
  return n.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table reproduction", table2},
      {"HWP identities", hwp_rows},
      {"W_h fractions", wh_fractions},
      {"qubitization formulas", qubitization},
      {"scaling exponents, plateaus, crossover", scaling},
      {"tile evolutions", tiles},
      {"commutator bound dominance", bounds},
      {"Trotter step inequality", trotter_step},
      {"identities: shifts, rules, free-fermion norms", identities},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed ? 1 : 0;
}
