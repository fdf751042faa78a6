#include "tiletrot/trotterbounds.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "tiletrot/error.hpp"
#include "tiletrot/freefermion.hpp"

namespace tiletrot {

const char* to_string(ModelKind m) {
  switch (m) {
    case ModelKind::hubbard: return "hubbard";
    case ModelKind::extended_hubbard: return "extended";
    case ModelKind::ppp: return "ppp";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "hubbard") return ModelKind::hubbard;
  if (s == "extended" || s == "extended_hubbard") return ModelKind::extended_hubbard;
  if (s == "ppp") return ModelKind::ppp;
  throw Error(ErrorKind::unknown_kind, "model '" + s + "'");
}

void ModelParams::validate() const {
  if (!(tau > 0.0)) throw Error(ErrorKind::invalid_parameter, "tau must be positive");
  if (!(U >= 0.0)) throw Error(ErrorKind::invalid_parameter, "U must be nonnegative");
  if (!(V >= 0.0)) throw Error(ErrorKind::invalid_parameter, "V must be nonnegative");
}

namespace {

const double kSqrt6 = std::sqrt(6.0);

int require_regular(const LatticeGraph& g) {
  auto k = g.regular_degree();
  if (!k) throw Error(ErrorKind::non_regular_lattice, "lattice is not k-regular");
  return *k;
}

// Star of site i and the adjacency, both restricted to the radius-2 ball around
// i. [S_i, R] vanishes outside that ball, so its norms are unchanged.
struct LocalStar {
  Eigen::MatrixXd star;
  Eigen::MatrixXd r;
};

LocalStar local_star(const LatticeGraph& g, int i, std::optional<int> exclude = std::nullopt) {
  if (exclude && !g.has_edge(i, *exclude))
    throw Error(ErrorKind::not_a_neighbor, std::to_string(*exclude) + " is not adjacent to " + std::to_string(i));
  std::vector<int> ball{i};
  for (int j : g.neighbors(i)) {
    ball.push_back(j);
    for (int k : g.neighbors(j)) ball.push_back(k);
  }
  std::sort(ball.begin(), ball.end());
  ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
  auto pos = [&](int x) { return static_cast<int>(std::lower_bound(ball.begin(), ball.end(), x) - ball.begin()); };
  LocalStar ls;
  ls.r = g.adjacency()(ball, ball);
  ls.star = Eigen::MatrixXd::Zero(ls.r.rows(), ls.r.cols());
  for (int j : g.neighbors(i)) {
    if (exclude && j == *exclude) continue;
    ls.star(pos(i), pos(j)) = ls.star(pos(j), pos(i)) = 1.0;
  }
  return ls;
}

}  // namespace

double bound_chc(const LatticeGraph& g, const ModelParams& p, int k) {
  const double n = g.n_sites(), t = p.tau, u = p.U, v = p.V;
  const double r1 = schatten1(g.adjacency());
  return (u * u + k * v * v) * t * r1 + ((4.0 * k - 2.0) * t * u * v + (k - 1.0) * (4.0 * k - 1.0) * t * v * v) * k * n;
}

double bound_ihh_sitewise(const LatticeGraph& g, const ModelParams& p) {
  double sum = 0.0;
  for (int i = 0; i < g.n_sites(); ++i) {
    const auto ls = local_star(g, i);
    const double ti = ff_norm(ls.star, p.tau);
    sum += p.tau * p.tau * ff_comm_norm(ls.star, ls.r) + 2.0 * ti * ti;
  }
  return 0.5 * p.U * sum;
}

double bound_ihh_fragment(const LatticeGraph& g, const ModelParams& p) {
  const double nc = g.count_role(SiteRole::center), ned = g.count_role(SiteRole::edge);
  return p.U * p.tau * p.tau * (12.0 * nc + 8.0 * ned + kSqrt6 * g.n_sites());
}

double bound_vhh_evaluated(const LatticeGraph& g, const ModelParams& p, int k) {
  const double t2 = p.tau * p.tau;
  double hk = 0.0, chk = 0.0, hk1 = 0.0, chk1 = 0.0;
  for (int i = 0; i < g.n_sites(); ++i) {
    const auto ls = local_star(g, i);
    hk = std::max(hk, ff_norm(ls.star, p.tau, Sectors::single));
    chk = std::max(chk, t2 * ff_comm_norm(ls.star, ls.r, Sectors::single));
    for (int j : g.neighbors(i)) {
      const auto l1 = local_star(g, i, j);
      hk1 = std::max(hk1, ff_norm(l1.star, p.tau, Sectors::single));
      chk1 = std::max(chk1, t2 * ff_comm_norm(l1.star, l1.r, Sectors::single));
    }
  }
  return p.V * k * g.n_sites() * (chk1 + 4.0 * hk1 * hk1 + chk + 2.0 * hk * hk);
}

double bound_vhh_closed_form_k3(const ModelParams& p, int n_sites) {
  return 3.0 * p.V * p.tau * p.tau * n_sites * (16.0 + 2.0 * std::sqrt(3.0));
}

TrotterErrorBreakdown w_so2_hubbard(const LatticeGraph& g, const ModelParams& p) {
  p.validate();
  double ihh = 0.0;
  if (g.kind() == LatticeKind::periodic_hex)
    ihh = (12.0 + kSqrt6) * p.U * p.tau * p.tau * g.n_sites();
  else if (g.kind() == LatticeKind::hex_fragment)
    ihh = bound_ihh_fragment(g, p);
  else
    throw Error(ErrorKind::unsupported_lattice, std::string("Hubbard W_SO2 is defined for hexagonal lattices, got ") +
                                                    to_string(g.kind()));
  const double r1 = schatten1(g.adjacency());
  const double chc = p.U * p.U * p.tau * r1;
  TrotterErrorBreakdown b;
  b.components[kCompIhh] = ihh;
  b.components[kCompChC] = chc;
  b.components[kCompRnorm] = r1;
  b.w_so2 = ihh / 12.0 + chc / 24.0;
  b.w_tile = b.w_so2;
  return b;
}

TrotterErrorBreakdown w_so2_extended(const LatticeGraph& g, const ModelParams& p, int k,
                                     const ExtendedBoundOptions& opt) {
  p.validate();
  if (require_regular(g) != k)
    throw Error(ErrorKind::non_regular_lattice, "lattice degree differs from k=" + std::to_string(k));
  TrotterErrorBreakdown b;
  const double chc = bound_chc(g, p, k);
  const double ihh = opt.ihh == IhhBound::constant14 ? 14.0 * p.U * p.tau * p.tau * g.n_sites()
                                                      : bound_ihh_sitewise(g, p);
  const double vhh_eval = bound_vhh_evaluated(g, p, k);
  double vhh = vhh_eval;
  const bool closed = opt.vhh == VhhBound::closed_form_k3 ||
                      (opt.vhh == VhhBound::automatic && g.kind() == LatticeKind::periodic_hex && k == 3);
  if (closed) {
    if (k != 3) throw Error(ErrorKind::unsupported_bound, "closed-form [[H_V,H_h],H_h] bound needs k=3");
    vhh = bound_vhh_closed_form_k3(p, g.n_sites());
    b.components[std::string(kCompVhh) + " evaluated"] = vhh_eval;
  }
  b.components[kCompChC] = chc;
  b.components[kCompIhh] = ihh;
  b.components[kCompVhh] = vhh;
  b.components[kCompRnorm] = schatten1(g.adjacency());
  b.w_so2 = (ihh + vhh) / 12.0 + chc / 24.0;
  b.w_tile = b.w_so2;
  return b;
}

namespace {

std::vector<Eigen::MatrixXd> section_matrices(const SectionCover& cover, int n_sites) {
  std::vector<Eigen::MatrixXd> r;
  for (const auto& s : cover.sections) r.push_back(section_adjacency(s, n_sites));
  return r;
}

}  // namespace

double w_h_three_sections(const SectionCover& cover, double tau, int n_sites) {
  if (cover.sections.size() != 3)
    throw Error(ErrorKind::section_count, "expected 3 sections, got " + std::to_string(cover.sections.size()));
  const auto r = section_matrices(cover, n_sites);
  const auto& b = r[0];
  const auto& rr = r[1];
  const auto& g = r[2];
  auto n = [](const auto& x, const auto& y, const auto& z) { return ff_nested_comm_norm(x, y, z); };
  const double t3 = tau * tau * tau;
  const double twelfth = n(b, rr, rr) + n(b, rr, g) + n(b, g, rr) + n(b, g, g) + n(rr, g, g);
  const double twentyfourth = n(b, rr, b) + n(b, g, b) + n(rr, g, rr);
  return t3 * (twelfth / 12.0 + twentyfourth / 24.0);
}

double w_h_general(const SectionCover& cover, double tau, int n_sites) {
  const auto r = section_matrices(cover, n_sites);
  const int m = static_cast<int>(r.size());
  double twelfth = 0.0, twentyfourth = 0.0;
  for (int b = 0; b < m; ++b)
    for (int c = b + 1; c < m; ++c) {
      for (int a = b + 1; a < m; ++a) twelfth += ff_nested_comm_norm(r[b], r[c], r[a]);
      twentyfourth += ff_nested_comm_norm(r[b], r[c], r[b]);
    }
  return tau * tau * tau * (twelfth / 12.0 + twentyfourth / 24.0);
}

TrotterErrorBreakdown w_tile(const LatticeGraph& g, const SectionCover& cover, const ModelParams& p,
                             const ExtendedBoundOptions& opt) {
  TrotterErrorBreakdown b;
  switch (p.model) {
    case ModelKind::hubbard: b = w_so2_hubbard(g, p); break;
    case ModelKind::extended_hubbard: b = w_so2_extended(g, p, require_regular(g), opt); break;
    case ModelKind::ppp:
      throw Error(ErrorKind::unsupported_bound, "no Trotter error bound is available for the PPP model");
  }
  b.w_h = cover.sections.size() == 3 ? w_h_three_sections(cover, p.tau, g.n_sites())
                                     : w_h_general(cover, p.tau, g.n_sites());
  b.w_tile = b.w_so2 + b.w_h;
  return b;
}

}  // namespace tiletrot
