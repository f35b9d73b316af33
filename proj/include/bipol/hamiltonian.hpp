#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bipol/exciton.hpp"
#include "bipol/model.hpp"

namespace bipol {

// 1 iff the minimal-image separation is inside the excluded window.
int blockade_mask(int n, const ModelParams& p);

// Dynamical interaction D(n) at minimal-image separation n.
// NNA: D at |n| = 2l+1 only. VdW: D [(2l+1)/|n|]^6 outside the mask.
double potential(int n, const ModelParams& p);

// Fixed-total-momentum sector basis. Relative wave numbers are stored as
// twice-integers T = 2*kappa (k = pi T / (N a)), so odd total indices get the
// half-integer-offset grid without special casing. The exciton-pair sector
// lives in relative-separation space where the blockade is a plain deletion;
// with the constraint off it mirrors the photon-pair sector in k-space.
struct FixedKBasis {
  int n_sites = 0;
  int nu_total = 0;   // wrapped total-momentum index nu'
  bool even_total = true;
  ConstraintMode constraint = ConstraintMode::Blockade;

  std::vector<int> kappa2;     // canonical T >= 0 for the A and B_S sectors
  std::vector<int> kappa2_ba;  // T subset for B_A (non-self-paired)
  std::vector<int> c_seps;     // retained separations (Blockade mode)

  int a_off = 0, bs_off = 0, ba_off = 0, c_off = 0, dim = 0;

  bool self_paired(int t2) const { return t2 == 0 || t2 == n_sites; }
  // full signed relative grid, entry i -> T = 2 kappa
  int t2_full(int i) const { return even_total ? 2 * i - n_sites + 2 : 2 * i - n_sites + 1; }
};

FixedKBasis make_fixed_k_basis(const ModelParams& p, int nu_total);

struct FixedKMatrix {
  FixedKBasis basis;
  Eigen::MatrixXd h; // real symmetric in this gauge for every K
};

// Two-excitation Hamiltonian at fixed total momentum (the K != 0 equations,
// assembled in the mixed k-space / separation-space basis).
FixedKMatrix build_fixed_k(const ModelParams& p, int nu_total);

// Small-N oracle: the full two-excitation Hamiltonian over real-space pairs
// {photon-photon, photon-exciton, exciton-exciton (blocked pairs removed)}.
struct RealSpaceMatrix {
  std::vector<std::pair<int, int>> a_pairs; // unordered, n <= m
  std::vector<std::pair<int, int>> b_pairs; // ordered (photon site, exciton site)
  std::vector<std::pair<int, int>> c_pairs; // unordered, n < m, allowed
  int a_off = 0, b_off = 0, c_off = 0, dim = 0;
  Eigen::MatrixXd h;
};
RealSpaceMatrix build_real_space(const ModelParams& p);

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  Eigen::MatrixXd vectors; // orthonormal columns
};
// Dense symmetric eigensolve; throws numeric_error with diagnostics on failure.
EigenSystem eigensolve(const Eigen::MatrixXd& h);

// One eigenstate resolved into amplitude arrays over signed separations
// n = -N/2+1 .. N/2 and their transforms over the sector's relative grid.
struct TwoExcitationState {
  double energy = 0.0;
  Eigen::VectorXcd a_n, bs_n, ba_n, c_n; // indexed by sep_index(n, N)
  Eigen::VectorXcd a_k, b_k, c_k;        // indexed by the full relative grid
  std::vector<double> rel_kappa;         // kappa values of that grid
  double w_aa = 0.0, w_ab = 0.0, w_cc = 0.0;

  Eigen::VectorXcd centered(const Eigen::VectorXcd& x) const {
    return x.array() - x.mean();
  }
};

TwoExcitationState extract_state(const Eigen::VectorXd& v, double energy,
                                 const FixedKBasis& basis, const ModelParams& p);

// Kinetic kernels of the fixed-K equations, by twice-index T = 2 kappa.
double pair_kernel_pp(const ModelParams& p, int nu_total, int t2);
double pair_kernel_pe(const ModelParams& p, int nu_total, int t2); // photon at K/2+k
double pair_kernel_ee(const ModelParams& p, int nu_total, int t2);

} // namespace bipol
