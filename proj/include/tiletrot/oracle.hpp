#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "tiletrot/lattice.hpp"
#include "tiletrot/tiling.hpp"
#include "tiletrot/trotterbounds.hpp"

namespace tiletrot {

// Exact small-system checks. Qubit q holds mode q; the Jordan-Wigner string of
// a mode runs over all lower modes. Spin orbitals are interleaved, i-up at 2i
// and i-down at 2i+1. Every operator built here is real in this basis.

inline constexpr int kMaxQubits = 16;
inline constexpr int kMaxDenseQubits = 14;

using SpMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using CMatrix = Eigen::MatrixXcd;

struct QubitOperator {
  int n_qubits = 0;
  SpMat matrix;

  std::int64_t dim() const { return std::int64_t{1} << n_qubits; }
};

enum class Piece { H_h, H_I, H_V, H_C };

const char* to_string(Piece p);

// Both spin sectors. H_I and H_V are the shifted ZZ forms.
QubitOperator jw_hamiltonian(const LatticeGraph& g, const ModelParams& p, Piece piece);

// Hopping terms of one section over both spins.
QubitOperator jw_section(const Section& s, int n_sites, double tau);

// -tau sum_ij R_ij a_i^dag a_j on one spin sector, one qubit per site.
QubitOperator jw_single_sector_hopping(const Eigen::MatrixXd& r, double tau);

// Tile hopping in its own local mode order, one spin sector.
QubitOperator jw_tile(TileKind kind, double tau);

// Unshifted interaction pieces: U sum n n and (V/2) sum_ordered sum_ss' n n.
QubitOperator jw_onsite_unshifted(const LatticeGraph& g, double U);
QubitOperator jw_nn_unshifted(const LatticeGraph& g, double V);

// Basis states grouped by (N_up, N_down) for interleaved orbitals.
std::vector<std::vector<int>> spin_sector_blocks(int n_sites);
// Basis states with exactly eta set bits.
std::vector<int> particle_sector(int n_qubits, int eta);

Eigen::MatrixXd dense_block(const SpMat& m, const std::vector<int>& idx);

// Largest |eigenvalue| of a symmetric operator by power iteration on its square.
double exact_spectral_norm(const QubitOperator& op, double tol = 1e-8, int max_iter = 100000);

// Same quantity from dense eigensolves of the (N_up, N_down) blocks.
double sector_spectral_norm(const SpMat& m, const std::vector<std::vector<int>>& blocks);

struct CheckResult {
  std::string check;
  std::string instance;
  double exact = 0.0;
  double bound = 0.0;
  bool pass = false;
};

using VerificationReport = std::vector<CheckResult>;

bool all_pass(const VerificationReport& r);

// exact <= bound up to floating-point slack.
bool dominated(double exact, double bound);

// Unitary of a tile built from the fermionic swap network and the cos/sin
// two-mode core; compare with exp(-i H t).
CMatrix tile_circuit_unitary(TileKind kind, double tau, double t);
double verify_tile_evolution(TileKind kind, double tau, double t);

// [[H_C,H_h],H_C], [[H_I,H_h],H_h] and [[H_V,H_h],H_h] against their bounds.
// The lattice must be k-regular.
// bound_scale multiplies every bound; values below 1 serve as fault injection.
VerificationReport verify_commutator_bounds(const LatticeGraph& g, const ModelParams& p,
                                            const std::string& instance, double bound_scale = 1.0);

// One report row per t, plus a row for the spread of error / t^3.
VerificationReport verify_trotter_step(const LatticeGraph& g, const SectionCover& cover, const ModelParams& p,
                                       const std::vector<double>& ts, const std::string& instance,
                                       double bound_scale = 1.0);

// Energy offsets between shifted and unshifted interactions in the eta-electron sector.
double delta_e_onsite(double U, int n_sites, int eta);
// Value obtained by carrying the sums through: (Vk/2)(N - 2 eta).
double delta_e_nn(double V, int k, int n_sites, int eta);
// Closed form as usually quoted: (Vk/4)(N - 4 eta).
double delta_e_nn_quoted(double V, int k, int n_sites, int eta);

struct ShiftMeasurement {
  double offset = 0.0;      // mean diagonal of (shifted - unshifted) on the sector
  double nonscalar = 0.0;   // max |entry| of (shifted - unshifted - offset * 1)
};

ShiftMeasurement measure_shift(const SpMat& shifted, const SpMat& unshifted, const std::vector<int>& sector);

// The two shift rows compare the measured offset with delta_e_onsite and
// delta_e_nn; the lattice must be k-regular when V != 0.
VerificationReport verify_chemical_shifts(const LatticeGraph& g, const ModelParams& p, int eta,
                                          const std::string& instance);

VerificationReport verify_commutator_rules(double tau = 1.0);

// ||H_h|| from power iteration and from dense blocks against tau ||R||_1.
VerificationReport verify_ff_norm(const LatticeGraph& g, double tau, const std::string& instance);

enum class VerifyLevel { fast, full };

// fast: tiles, rules, shifts, free-fermion norms. full adds bounds and the Trotter step.
VerificationReport run_verification(VerifyLevel level, double bound_scale = 1.0);

}  // namespace tiletrot
