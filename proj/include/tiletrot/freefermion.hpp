#pragma once

#include <cmath>
#include <optional>

#include <Eigen/Dense>

#include "tiletrot/error.hpp"
#include "tiletrot/lattice.hpp"

namespace tiletrot {

// Which spin sectors a free-fermion norm refers to. A single sector carries
// half the Schatten-1 norm of its coupling matrix, two sectors the full norm.
enum class Sectors { single, both };

inline double sector_factor(Sectors s) { return s == Sectors::single ? 0.5 : 1.0; }

template <typename Derived>
bool is_selfadjoint(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar rel_tol = 1e-12) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  const auto scale = std::max<typename Derived::RealScalar>(m.cwiseAbs().maxCoeff(), 1);
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

// Sum of |eigenvalues| of a symmetric (Hermitian) matrix.
template <typename Derived>
typename Derived::RealScalar schatten1(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  if (!is_selfadjoint(m)) throw Error(ErrorKind::non_symmetric, "schatten1 expects a symmetric matrix");
  if (m.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Plain> es(m.eval(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

// Schatten-1 norm of a real antisymmetric matrix K, via the Hermitian iK.
double schatten1_skew(const Eigen::MatrixXd& k);

template <typename A, typename B>
typename A::PlainObject commutator(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a * b - b * a;
}

// Operator norm of -tau sum R_ij a_i^dag a_j over the requested sectors.
double ff_norm(const Eigen::MatrixXd& r, double tau, Sectors sectors = Sectors::both);

// Star of site i (all bonds at i), optionally dropping the bond i-j.
Eigen::MatrixXd star_matrix(const LatticeGraph& g, int i, std::optional<int> exclude = std::nullopt);

// Norm of [H_A, H_B] for unit-hopping quadratic operators with couplings A, B.
// Multiply by the product of hopping scales at the call site.
double ff_comm_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, Sectors sectors = Sectors::both);

// Norm of [[H_A, H_B], H_C].
double ff_nested_comm_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& c,
                           Sectors sectors = Sectors::both);

}  // namespace tiletrot
