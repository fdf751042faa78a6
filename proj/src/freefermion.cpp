#include "tiletrot/freefermion.hpp"

#include <vector>

#include <Eigen/SparseCore>

namespace tiletrot {

namespace {

using SpMat = Eigen::SparseMatrix<double>;

std::vector<int> support(const Eigen::MatrixXd& m) {
  std::vector<int> s;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (m.row(i).cwiseAbs().maxCoeff() != 0.0 || m.col(i).cwiseAbs().maxCoeff() != 0.0) s.push_back(static_cast<int>(i));
  return s;
}

// Rows/cols touched by [A,B] when A lives on `sa`: sa plus its B-neighbors.
std::vector<int> commutator_support(const std::vector<int>& sa, const Eigen::MatrixXd& b) {
  std::vector<char> in(static_cast<std::size_t>(b.rows()), 0);
  for (int i : sa) {
    in[static_cast<std::size_t>(i)] = 1;
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0.0 || b(j, i) != 0.0) in[static_cast<std::size_t>(j)] = 1;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

Eigen::MatrixXd restrict(const Eigen::MatrixXd& m, const std::vector<int>& idx) {
  return m(idx, idx);
}

void check_dims(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw Error(ErrorKind::dimension_mismatch, "coupling matrices must be square and of equal size");
}

}  // namespace

double schatten1_skew(const Eigen::MatrixXd& k) {
  if (k.size() == 0) return 0.0;
  const Eigen::MatrixXcd h = std::complex<double>(0.0, 1.0) * k.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double ff_norm(const Eigen::MatrixXd& r, double tau, Sectors sectors) {
  return std::abs(tau) * sector_factor(sectors) * schatten1(r);
}

Eigen::MatrixXd star_matrix(const LatticeGraph& g, int i, std::optional<int> exclude) {
  if (i < 0 || i >= g.n_sites()) throw Error(ErrorKind::invalid_parameter, "site out of range");
  if (exclude && !g.has_edge(i, *exclude))
    throw Error(ErrorKind::not_a_neighbor, "site " + std::to_string(*exclude) + " is not adjacent to " + std::to_string(i));
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(g.n_sites(), g.n_sites());
  for (int j : g.neighbors(i)) {
    if (exclude && j == *exclude) continue;
    s(i, j) = s(j, i) = 1.0;
  }
  return s;
}

double ff_comm_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, Sectors sectors) {
  check_dims(a, b);
  const auto sa = support(a);
  const auto sb = support(b);
  const auto idx = sa.size() <= sb.size() ? commutator_support(sa, b) : commutator_support(sb, a);
  if (idx.empty()) return 0.0;
  const Eigen::MatrixXd ar = restrict(a, idx), br = restrict(b, idx);
  return sector_factor(sectors) * schatten1_skew(ar * br - br * ar);
}

double ff_nested_comm_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c,
                           Sectors sectors) {
  check_dims(a, b);
  check_dims(a, c);
  const SpMat as = a.sparseView(), bs = b.sparseView(), cs = c.sparseView();
  const SpMat k = SpMat(as * bs) - SpMat(bs * as);
  const SpMat n = SpMat(k * cs) - SpMat(cs * k);
  Eigen::MatrixXd d = Eigen::MatrixXd(n);
  const auto idx = support(d);
  if (idx.empty()) return 0.0;
  d = restrict(d, idx);
  d = 0.5 * (d + d.transpose());
  return sector_factor(sectors) * schatten1(d);
}

}  // namespace tiletrot
