#include "tiletrot/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "tiletrot/error.hpp"
#include "tiletrot/freefermion.hpp"

namespace tiletrot {

const char* to_string(Piece p) {
  switch (p) {
    case Piece::H_h: return "H_h";
    case Piece::H_I: return "H_I";
    case Piece::H_V: return "H_V";
    case Piece::H_C: return "H_C";
  }
  return "?";
}

namespace {

using Triplet = Eigen::Triplet<double>;

struct Hop {
  int p, q;
  double c;  // c a_p^dag a_q
};

struct ZZ {
  int p, q;
  double c;  // c Z_p Z_q
};

void check_size(int n_qubits) {
  if (n_qubits > kMaxQubits)
    throw Error(ErrorKind::size_limit,
                std::to_string(n_qubits) + " qubits exceeds the limit of " + std::to_string(kMaxQubits));
}

int parity_below(std::uint32_t s, int p) { return std::popcount(s & ((1u << p) - 1u)) & 1; }

SpMat build_hops(int n, const std::vector<Hop>& hops) {
  check_size(n);
  const std::uint32_t dim = 1u << n;
  std::vector<Triplet> trip;
  for (std::uint32_t s = 0; s < dim; ++s)
    for (const auto& h : hops) {
      if (!(s >> h.q & 1u)) continue;
      int sign = parity_below(s, h.q);
      const std::uint32_t s1 = s ^ (1u << h.q);
      if (s1 >> h.p & 1u) continue;
      sign ^= parity_below(s1, h.p);
      trip.emplace_back(static_cast<int>(s1 | (1u << h.p)), static_cast<int>(s), sign ? -h.c : h.c);
    }
  SpMat m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

// Z = 2n - 1, so an occupied mode contributes +1.
double z_of(std::uint32_t s, int p) { return (s >> p & 1u) ? 1.0 : -1.0; }

template <typename F>
SpMat build_diagonal(int n, F&& f) {
  check_size(n);
  const std::uint32_t dim = 1u << n;
  std::vector<Triplet> trip;
  for (std::uint32_t s = 0; s < dim; ++s) {
    const double v = f(s);
    if (v != 0.0) trip.emplace_back(static_cast<int>(s), static_cast<int>(s), v);
  }
  SpMat m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

SpMat build_zz(int n, const std::vector<ZZ>& terms) {
  return build_diagonal(n, [&](std::uint32_t s) {
    double v = 0.0;
    for (const auto& t : terms) v += t.c * z_of(s, t.p) * z_of(s, t.q);
    return v;
  });
}

std::vector<Hop> hops_from_matrix(const Eigen::MatrixXd& r, double tau, int stride, int offset) {
  std::vector<Hop> hops;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0.0) hops.push_back({stride * i + offset, stride * j + offset, -tau * r(i, j)});
  return hops;
}

SpMat two_spin_hopping(const Eigen::MatrixXd& r, double tau) {
  auto hops = hops_from_matrix(r, tau, 2, 0);
  auto down = hops_from_matrix(r, tau, 2, 1);
  hops.insert(hops.end(), down.begin(), down.end());
  return build_hops(2 * static_cast<int>(r.rows()), hops);
}

SpMat onsite_zz(const LatticeGraph& g, double U) {
  std::vector<ZZ> t;
  for (int i = 0; i < g.n_sites(); ++i) t.push_back({2 * i, 2 * i + 1, U / 4.0});
  return build_zz(2 * g.n_sites(), t);
}

// (V/8) over ordered pairs equals (V/4) over undirected bonds.
SpMat nn_zz(const LatticeGraph& g, double V) {
  std::vector<ZZ> t;
  for (auto [i, j] : g.edges())
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) t.push_back({2 * i + a, 2 * j + b, V / 4.0});
  return build_zz(2 * g.n_sites(), t);
}

Eigen::VectorXd block_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double max_abs_eig(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return block_eigenvalues(m).cwiseAbs().maxCoeff();
}

CheckResult bound_row(std::string check, std::string instance, double exact, double bound) {
  return {std::move(check), std::move(instance), exact, bound, dominated(exact, bound)};
}

}  // namespace

QubitOperator jw_hamiltonian(const LatticeGraph& g, const ModelParams& p, Piece piece) {
  const int n = 2 * g.n_sites();
  check_size(n);
  switch (piece) {
    case Piece::H_h: return {n, two_spin_hopping(g.adjacency(), p.tau)};
    case Piece::H_I: return {n, onsite_zz(g, p.U)};
    case Piece::H_V: return {n, nn_zz(g, p.V)};
    case Piece::H_C: {
      SpMat m = onsite_zz(g, p.U);
      if (p.model != ModelKind::hubbard) m += nn_zz(g, p.V);
      return {n, m};
    }
  }
  return {};
}

QubitOperator jw_section(const Section& s, int n_sites, double tau) {
  check_size(2 * n_sites);
  return {2 * n_sites, two_spin_hopping(section_adjacency(s, n_sites), tau)};
}

QubitOperator jw_single_sector_hopping(const Eigen::MatrixXd& r, double tau) {
  const int n = static_cast<int>(r.rows());
  return {n, build_hops(n, hops_from_matrix(r, tau, 1, 0))};
}

QubitOperator jw_tile(TileKind kind, double tau) { return jw_single_sector_hopping(tile_catalog(kind).adjacency, tau); }

QubitOperator jw_onsite_unshifted(const LatticeGraph& g, double U) {
  const int n = 2 * g.n_sites();
  return {n, build_diagonal(n, [&](std::uint32_t s) {
            double v = 0.0;
            for (int i = 0; i < g.n_sites(); ++i) v += U * (s >> (2 * i) & 1u) * (s >> (2 * i + 1) & 1u);
            return v;
          })};
}

QubitOperator jw_nn_unshifted(const LatticeGraph& g, double V) {
  const int n = 2 * g.n_sites();
  return {n, build_diagonal(n, [&](std::uint32_t s) {
            double v = 0.0;
            for (auto [i, j] : g.edges()) {
              const int ni = std::popcount((s >> (2 * i)) & 3u), nj = std::popcount((s >> (2 * j)) & 3u);
              v += V * ni * nj;
            }
            return v;
          })};
}

std::vector<std::vector<int>> spin_sector_blocks(int n_sites) {
  const int n = 2 * n_sites;
  check_size(n);
  std::uint32_t up_mask = 0;
  for (int i = 0; i < n_sites; ++i) up_mask |= 1u << (2 * i);
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>((n_sites + 1) * (n_sites + 1)));
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int up = std::popcount(s & up_mask), dn = std::popcount(s & ~up_mask);
    blocks[static_cast<std::size_t>(up * (n_sites + 1) + dn)].push_back(static_cast<int>(s));
  }
  return blocks;
}

std::vector<int> particle_sector(int n_qubits, int eta) {
  check_size(n_qubits);
  std::vector<int> idx;
  for (std::uint32_t s = 0; s < (1u << n_qubits); ++s)
    if (std::popcount(s) == eta) idx.push_back(static_cast<int>(s));
  return idx;
}

Eigen::MatrixXd dense_block(const SpMat& m, const std::vector<int>& idx) {
  std::vector<int> pos(static_cast<std::size_t>(m.cols()), -1);
  for (std::size_t a = 0; a < idx.size(); ++a) pos[static_cast<std::size_t>(idx[a])] = static_cast<int>(a);
  const int d = static_cast<int>(idx.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (SpMat::InnerIterator it(m, idx[static_cast<std::size_t>(a)]); it; ++it) {
      const int b = pos[static_cast<std::size_t>(it.col())];
      if (b >= 0) out(a, b) = it.value();
    }
  return out;
}

double exact_spectral_norm(const QubitOperator& op, double tol, int max_iter) {
  const auto& a = op.matrix;
  if (a.nonZeros() == 0) return 0.0;
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  for (int restart = 0; restart < 4; ++restart) {
    Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(a.cols(), [&](Eigen::Index) { return gauss(rng); });
    v.normalize();
    bool stalled = false;
    for (int it = 0; it < max_iter && !stalled; ++it) {
      const Eigen::VectorXd w = a * v;
      const Eigen::VectorXd u = a * w;
      const double mu = w.squaredNorm();
      stalled = !(mu > 0.0);  // start vector in the kernel: restart
      if (!stalled && (u - mu * v).norm() <= tol * mu) return std::sqrt(mu);
      if (!stalled) v = u / u.norm();
    }
    if (!stalled) break;
  }
  throw Error(ErrorKind::non_convergence, "power iteration did not converge in " + std::to_string(max_iter) +
                                              " iterations");
}

double sector_spectral_norm(const SpMat& m, const std::vector<std::vector<int>>& blocks) {
  double best = 0.0;
  for (const auto& b : blocks) best = std::max(best, max_abs_eig(dense_block(m, b)));
  return best;
}

bool all_pass(const VerificationReport& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
}

bool dominated(double exact, double bound) { return exact <= bound * (1.0 + 1e-9) + 1e-9; }

// ---- tiles ------------------------------------------------------------------

namespace {

using Gate = Eigen::Matrix4cd;

// Two-mode gates use the local index 2 b_m + b_{m+1}.
// F_{m+1,m}; F_{m,m+1} is its conjugate by the fermionic swap.
Gate gate_f_down() {
  const double s = std::sqrt(0.5);
  Gate f;
  f << 1, 0, 0, 0, 0, s, s, 0, 0, s, -s, 0, 0, 0, 0, -1;
  return f;
}

Gate gate_fswap() {
  Gate f;
  f << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1;
  return f;
}

Gate gate_f_up() { return gate_fswap() * gate_f_down() * gate_fswap(); }

Gate gate_core(double theta) {
  const std::complex<double> c = std::cos(theta), is{0.0, std::sin(theta)};
  Gate g = Gate::Identity();
  g(1, 1) = c;
  g(2, 2) = c;
  g(1, 2) = is;
  g(2, 1) = is;
  return g;
}

CMatrix embed(const Gate& g, int m, int n) {
  const int dim = 1 << n;
  CMatrix out = CMatrix::Zero(dim, dim);
  const int mask = (1 << m) | (1 << (m + 1));
  for (int s = 0; s < dim; ++s) {
    const int l = 2 * (s >> m & 1) + (s >> (m + 1) & 1);
    for (int l2 = 0; l2 < 4; ++l2) {
      if (g(l2, l) == 0.0) continue;
      const int s2 = (s & ~mask) | ((l2 >> 1) << m) | ((l2 & 1) << (m + 1));
      out(s2, s) = g(l2, l);
    }
  }
  return out;
}

}  // namespace

CMatrix tile_circuit_unitary(TileKind kind, double tau, double t) {
  const int n = tile_size(kind);
  const double th = tau * t;
  CMatrix v = CMatrix::Identity(1 << n, 1 << n);
  int core_mode = 0;
  double angle = th;
  switch (kind) {
    case TileKind::S1: break;
    case TileKind::S2:
      v = embed(gate_f_up(), 1, n);
      angle = std::sqrt(2.0) * th;
      break;
    case TileKind::C4:
      v = embed(gate_f_up(), 2, n) * embed(gate_f_down(), 0, n);
      core_mode = 1;
      angle = 2.0 * th;
      break;
    case TileKind::S4:
      v = embed(gate_f_up(), 3, n) * embed(gate_f_down(), 1, n) * embed(gate_f_up(), 2, n) * embed(gate_fswap(), 1, n);
      angle = 2.0 * th;
      break;
  }
  return v * embed(gate_core(angle), core_mode, n) * v.adjoint();
}

double verify_tile_evolution(TileKind kind, double tau, double t) {
  const auto h = jw_tile(kind, tau);
  const CMatrix gen = std::complex<double>(0.0, -t) * Eigen::MatrixXd(h.matrix).cast<std::complex<double>>();
  const CMatrix exact = gen.exp();
  double dev = (exact - tile_circuit_unitary(kind, tau, t)).cwiseAbs().maxCoeff();

  // Single-particle form: exp(i tau t A) = 1 + sum_pm (e^{i tau t lambda} - 1) v v^T.
  const auto& tpl = tile_catalog(kind);
  const CMatrix a = std::complex<double>(0.0, tau * t) * tpl.adjacency.cast<std::complex<double>>();
  CMatrix sp = CMatrix::Identity(a.rows(), a.cols());
  const std::array<double, 2> lam = {tpl.lambda_plus, tpl.lambda_minus};
  for (int c = 0; c < 2; ++c) {
    const Eigen::VectorXd e = tpl.eigenvectors.col(c);
    sp += (std::exp(std::complex<double>(0.0, tau * t * lam[static_cast<std::size_t>(c)])) - 1.0) *
          (e * e.transpose()).cast<std::complex<double>>();
  }
  dev = std::max(dev, (a.exp() - sp).cwiseAbs().maxCoeff());
  return dev;
}

// ---- commutator bounds ------------------------------------------------------

namespace {

// ||[[A,B],C]|| over (N_up, N_down) blocks; the nested commutator of real
// symmetric operators is real symmetric.
double nested_norm(const SpMat& a, const SpMat& b, const SpMat& c, const std::vector<std::vector<int>>& blocks) {
  double best = 0.0;
  for (const auto& idx : blocks) {
    if (idx.size() < 2) continue;
    const Eigen::MatrixXd da = dense_block(a, idx), db = dense_block(b, idx), dc = dense_block(c, idx);
    const Eigen::MatrixXd k = da * db - db * da;
    best = std::max(best, max_abs_eig(k * dc - dc * k));
  }
  return best;
}

int require_k(const LatticeGraph& g) {
  const auto k = g.regular_degree();
  if (!k) throw Error(ErrorKind::non_regular_lattice, "commutator checks need a k-regular lattice");
  return *k;
}

}  // namespace

VerificationReport verify_commutator_bounds(const LatticeGraph& g, const ModelParams& p, const std::string& instance,
                                            double bound_scale) {
  const int k = require_k(g);
  check_size(2 * g.n_sites());
  ModelParams ext = p;
  ext.model = ModelKind::extended_hubbard;
  const auto blocks = spin_sector_blocks(g.n_sites());
  const SpMat hh = jw_hamiltonian(g, ext, Piece::H_h).matrix;
  const SpMat hi = jw_hamiltonian(g, ext, Piece::H_I).matrix;
  const SpMat hv = jw_hamiltonian(g, ext, Piece::H_V).matrix;
  const SpMat hc = hi + hv;

  VerificationReport r;
  r.push_back(bound_row("[[H_C,H_h],H_C] vs F1", instance, nested_norm(hc, hh, hc, blocks),
                        bound_scale * bound_chc(g, ext, k)));
  const double ihh = nested_norm(hi, hh, hh, blocks);
  r.push_back(bound_row("[[H_I,H_h],H_h] vs sitewise", instance, ihh, bound_scale * bound_ihh_sitewise(g, ext)));
  if (g.kind() == LatticeKind::hex_fragment)
    r.push_back(bound_row("[[H_I,H_h],H_h] vs fragment", instance, ihh, bound_scale * bound_ihh_fragment(g, ext)));
  r.push_back(bound_row("[[H_V,H_h],H_h] vs F3", instance, nested_norm(hv, hh, hh, blocks),
                        bound_scale * bound_vhh_evaluated(g, ext, k)));
  return r;
}

// ---- Trotter step -----------------------------------------------------------

namespace {

CMatrix expm_symmetric(const Eigen::MatrixXd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (h + h.transpose()));
  const Eigen::VectorXcd ph =
      (es.eigenvalues().cast<std::complex<double>>() * std::complex<double>(0.0, -t)).array().exp();
  const CMatrix v = es.eigenvectors().cast<std::complex<double>>();
  return v * ph.asDiagonal() * v.adjoint();
}

double complex_spectral_norm(const CMatrix& d) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(d.adjoint() * d, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

VerificationReport verify_trotter_step(const LatticeGraph& g, const SectionCover& cover, const ModelParams& p,
                                       const std::vector<double>& ts, const std::string& instance,
                                       double bound_scale) {
  if (2 * g.n_sites() > kMaxDenseQubits)
    throw Error(ErrorKind::size_limit, "dense Trotter check is capped at " + std::to_string(kMaxDenseQubits) +
                                           " qubits");
  const auto rep = validate_cover(g, cover);
  if (!rep.valid) throw Error(ErrorKind::no_cover, "cover is invalid: " + rep.violations.front());
  const double w = bound_scale * w_tile(g, cover, p).w_tile;
  const auto blocks = spin_sector_blocks(g.n_sites());
  const SpMat hh = jw_hamiltonian(g, p, Piece::H_h).matrix;
  const SpMat hc = jw_hamiltonian(g, p, Piece::H_C).matrix;
  std::vector<SpMat> hs;
  for (const auto& s : cover.sections) hs.push_back(jw_section(s, g.n_sites(), p.tau).matrix);
  const SpMat h = hh + hc;

  VerificationReport r;
  std::vector<double> ratios;
  for (double t : ts) {
    double err = 0.0;
    for (const auto& idx : blocks) {
      const CMatrix exact = expm_symmetric(dense_block(h, idx), t);
      const CMatrix half_c = expm_symmetric(dense_block(hc, idx), t / 2.0);
      std::vector<CMatrix> half_s;
      for (const auto& m : hs) half_s.push_back(expm_symmetric(dense_block(m, idx), t / 2.0));
      // Operator order: the rightmost factor acts first.
      CMatrix step = half_c;
      for (const auto& u : half_s) step = step * u;
      for (auto it = half_s.rbegin(); it != half_s.rend(); ++it) step = step * *it;
      step = step * half_c;
      err = std::max(err, complex_spectral_norm(exact - step));
    }
    const double bound = w * t * t * t;
    r.push_back(bound_row("tile Trotter step t=" + std::to_string(t), instance, err, bound));
    if (t > 0.0) ratios.push_back(err / (t * t * t));
  }
  if (ratios.size() >= 2) {
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    const double spread = *lo > 0.0 ? (*hi - *lo) / *lo : 0.0;
    r.push_back({"error/t^3 spread", instance, spread, 0.2, spread < 0.2});
  }
  return r;
}

// ---- chemical shifts --------------------------------------------------------

double delta_e_onsite(double U, int n_sites, int eta) { return -0.5 * U * eta + 0.25 * U * n_sites; }

double delta_e_nn(double V, int k, int n_sites, int eta) { return 0.5 * V * k * (n_sites - 2.0 * eta); }

double delta_e_nn_quoted(double V, int k, int n_sites, int eta) { return 0.25 * V * k * (n_sites - 4.0 * eta); }

ShiftMeasurement measure_shift(const SpMat& shifted, const SpMat& unshifted, const std::vector<int>& sector) {
  const Eigen::MatrixXd d = dense_block(SpMat(shifted - unshifted), sector);
  ShiftMeasurement m;
  if (d.size() == 0) return m;
  m.offset = d.diagonal().mean();
  m.nonscalar = (d - m.offset * Eigen::MatrixXd::Identity(d.rows(), d.cols())).cwiseAbs().maxCoeff();
  return m;
}

VerificationReport verify_chemical_shifts(const LatticeGraph& g, const ModelParams& p, int eta,
                                          const std::string& instance) {
  const int n = g.n_sites();
  if (eta < 0 || eta > 2 * n) throw Error(ErrorKind::invalid_parameter, "eta outside [0, 2N]");
  const auto sector = particle_sector(2 * n, eta);
  const std::string inst = instance + " eta=" + std::to_string(eta);
  VerificationReport r;
  auto row = [&](std::string name, const ShiftMeasurement& m, double expected) {
    const bool ok = m.nonscalar <= 1e-10 && std::abs(m.offset - expected) <= 1e-10;
    r.push_back({std::move(name), inst, m.offset, expected, ok});
  };
  row("onsite shift", measure_shift(onsite_zz(g, p.U), jw_onsite_unshifted(g, p.U).matrix, sector),
      delta_e_onsite(p.U, n, eta));
  if (p.V != 0.0) {
    const int k = require_k(g);
    row("nearest-neighbour shift", measure_shift(nn_zz(g, p.V), jw_nn_unshifted(g, p.V).matrix, sector),
        delta_e_nn(p.V, k, n, eta));
  }
  return r;
}

// ---- commutator rules -------------------------------------------------------

VerificationReport verify_commutator_rules(double tau) {
  // Three sites, six spin orbitals; orbital o = 2 i + sigma.
  constexpr int n = 6;
  auto z = [&](int a) {
    return build_diagonal(n, [a](std::uint32_t s) { return z_of(s, a); });
  };
  auto b = [&](int a, int c) { return build_hops(n, {{a, c, -tau}}); };
  auto maxabs = [](const SpMat& m) {
    double v = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
      for (SpMat::InnerIterator it(m, k); it; ++it) v = std::max(v, std::abs(it.value()));
    return v;
  };
  auto comm = [](const SpMat& x, const SpMat& y) { return SpMat(x * y - y * x); };
  auto anti = [](const SpMat& x, const SpMat& y) { return SpMat(x * y + y * x); };

  std::array<double, 4> worst{};
  std::array<int, 4> count{};
  auto record = [&](int rule, double v) {
    worst[static_cast<std::size_t>(rule)] = std::max(worst[static_cast<std::size_t>(rule)], v);
    ++count[static_cast<std::size_t>(rule)];
  };
  for (int sigma = 0; sigma < 2; ++sigma)
    for (int si = 0; si < 3; ++si)
      for (int sj = 0; sj < 3; ++sj) {
        if (si == sj) continue;
        const int i = 2 * si + sigma, j = 2 * sj + sigma;
        const SpMat bij = b(i, j), bji = b(j, i);
        record(1, maxabs(comm(SpMat(z(i) * z(j)), bij)));
        for (int m = 0; m < n; ++m) {
          if (m == i || m == j) continue;
          const SpMat zz = z(i) * z(m);
          record(2, maxabs(anti(zz, bij)));
          record(3, maxabs(anti(zz, bji)));
          for (int q = m + 1; q < n; ++q) {
            if (q == i || q == j) continue;
            record(0, maxabs(comm(SpMat(z(m) * z(q)), bij)));
          }
        }
      }
  const char* names[4] = {"[ZmZn, Bij] = 0 (disjoint)", "[ZiZj, Bij] = 0", "{ZiZl, Bij} = 0", "{ZiZl, Bji} = 0"};
  VerificationReport r;
  for (int k = 0; k < 4; ++k)
    r.push_back({names[k], std::to_string(count[static_cast<std::size_t>(k)]) + " cases on 6 orbitals",
                 worst[static_cast<std::size_t>(k)], 0.0, worst[static_cast<std::size_t>(k)] <= 1e-12});
  return r;
}

// ---- free-fermion norms -----------------------------------------------------

VerificationReport verify_ff_norm(const LatticeGraph& g, double tau, const std::string& instance) {
  const double expected = ff_norm(g.adjacency(), tau, Sectors::both);
  const auto h = jw_hamiltonian(g, ModelParams{ModelKind::hubbard, tau, 0.0, 0.0, {}}, Piece::H_h);
  auto row = [&](std::string name, double v, double e) {
    return CheckResult{std::move(name), instance, v, e, std::abs(v - e) <= 1e-8 * std::max(1.0, e)};
  };
  VerificationReport r;
  r.push_back(row("||H_h|| power iteration", exact_spectral_norm(h, 1e-12), expected));
  r.push_back(row("||H_h|| sector eigensolve", sector_spectral_norm(h.matrix, spin_sector_blocks(g.n_sites())),
                  expected));
  const auto one = jw_single_sector_hopping(g.adjacency(), tau);
  r.push_back(row("||H_h,sigma|| single sector", exact_spectral_norm(one, 1e-12),
                  ff_norm(g.adjacency(), tau, Sectors::single)));
  return r;
}

// ---- suite ------------------------------------------------------------------

namespace {

void append(VerificationReport& a, const VerificationReport& b) { a.insert(a.end(), b.begin(), b.end()); }

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

VerificationReport run_verification(VerifyLevel level, double bound_scale) {
  VerificationReport r;
  for (auto kind : {TileKind::S1, TileKind::S2, TileKind::C4, TileKind::S4})
    for (double t : {0.1, 0.5, 1.0}) {
      const double d = verify_tile_evolution(kind, 1.0, t);
      r.push_back({"tile evolution", std::string(to_string(kind)) + " t=" + fmt_g(t), d, 1e-10, d <= 1e-10});
    }
  append(r, verify_commutator_rules());

  ModelParams hub{ModelKind::hubbard, 1.0, 4.0, 0.0, {}};
  append(r, verify_chemical_shifts(build_chain(2), hub, 1, "chain N=2"));
  ModelParams ext{ModelKind::extended_hubbard, 1.0, 4.0, 2.0, {}};
  for (int eta : {0, 2, 4, 8}) append(r, verify_chemical_shifts(build_ring(4), ext, eta, "ring N=4"));
  append(r, verify_chemical_shifts(build_ring(6), ext, 6, "ring N=6"));

  for (int n = 2; n <= 6; ++n) append(r, verify_ff_norm(build_chain(n), 1.0, "chain N=" + std::to_string(n)));
  for (int n = 3; n <= 6; ++n) append(r, verify_ff_norm(build_ring(n), 1.0, "ring N=" + std::to_string(n)));
  append(r, verify_ff_norm(build_hex_fragment({{0, 0}}), 1.0, "hexagon"));
  append(r, verify_ff_norm(build_square_fragment(3, 2), 1.0, "square 3x2"));

  if (level == VerifyLevel::full) {
    const std::vector<std::pair<std::string, LatticeGraph>> lattices = {
        {"ring N=4", build_ring(4)}, {"ring N=6", build_ring(6)}, {"hexagon", build_hex_fragment({{0, 0}})}};
    for (const auto& [name, g] : lattices)
      for (double u : {0.0, 2.0, 4.0})
        for (double v : {0.0, 2.0, 4.0}) {
          ModelParams p{ModelKind::extended_hubbard, 1.0, u, v, {}};
          append(r, verify_commutator_bounds(g, p, name + " U=" + fmt_g(u) + " V=" + fmt_g(v), bound_scale));
        }
    const auto hex = build_hex_fragment({{0, 0}});
    const auto cover = cover_hex_fragment(hex);
    const std::vector<double> ts = {0.05, 0.1, 0.2};
    append(r, verify_trotter_step(hex, cover, hub, ts, "hexagon Hubbard U=4", bound_scale));
    append(r, verify_trotter_step(hex, cover, ext, ts, "hexagon extended U=4 V=2", bound_scale));
  }
  return r;
}

}  // namespace tiletrot
