#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bipol/analysis.hpp"

namespace bipol {

// Virtual-polariton levels E^(p,i) of the photon-photon/photon-exciton
// subsystem (one photon plus one photon-exciton hybrid at the same wave
// number, coupling sqrt(2) G) together with the rotation weights.
// X entries carry eigenvector signs; their squares match the printed forms.
struct VirtualPolaritonBasis {
  std::vector<int> nu;          // signed free-grid indices, -N/2+1 .. N/2
  Eigen::VectorXd e_lower;      // E^(p,L)_nu
  Eigen::VectorXd e_upper;      // E^(p,U)_nu
  Eigen::VectorXd x_alpha_l, x_beta_l;
  Eigen::VectorXd x_alpha_u, x_beta_u;

  std::vector<double> mu;       // signed reduced indices
  Eigen::VectorXd e_exciton;    // E^(ex)_mu

  int index_of_nu(int nu_val) const; // position in the signed grid
};

VirtualPolaritonBasis virtual_pair_basis(const ModelParams& p);

// Coupling between the free and reduced wave-vector sets (closed form; the
// removable 0/0 points fall back to the defining overlap sum).
double lambda_coupling(int nu, double mu, const ModelParams& p);

// Scale relating the closed form to sum_s [1-theta(s)] e^{-i k_nu s} g_s(mu),
// fixed by matching at a regular point. Analytically sqrt((N-2l)/2).
double lambda_overlap_scale(const ModelParams& p);

// Normalized DFT of the blockade mask, (1/N) sum_{|n|<=l} e^{-i k n a}.
double blockade_mask_dft(double k, const ModelParams& p);

// Wave-packet mixing kernel; theta terms enter unnormalized (theta_hat(0)=2l+1).
double f_kernel(int nu, int nu_prime, const ModelParams& p);

// K=0 eigenproblem in the joint (virtual polariton, constrained exciton)
// basis, reduced over the +-nu / +-mu degeneracy to the physical sector.
struct PeSystem {
  std::vector<int> kappa;       // 0 .. N/2
  std::vector<double> mu_abs;   // distinct |mu|
  int l_off = 0, u_off = 0, e_off = 0, dim = 0;
  Eigen::MatrixXd h;
  Eigen::VectorXd energies;     // ascending
  Eigen::MatrixXd vectors;      // reduced coordinates

  // signed-amplitude views of one reduced eigenvector
  struct Amplitudes {
    std::vector<int> nu;            // signed
    Eigen::VectorXd p_lower, p_upper;
    std::vector<double> mu;         // signed
    Eigen::VectorXd e;
  };
  Amplitudes amplitudes(int state, const ModelParams& p) const;
};

PeSystem solve_pe_system(const ModelParams& p);

// Effective polaritonic wave vectors of the LL band, rho = 1 .. N/2 - l.
std::vector<double> effective_wavevectors(const ModelParams& p);

// Indices of the LL-band ladder states (rho = 1 .. N/2 - l) in an
// energy-sorted K=0 spectrum: each 2 E_L(k_rho^eff) prediction greedily
// claims the nearest unclaimed state inside the noninteracting LL window.
// Mixed-character states pushed into the window from above are skipped.
std::vector<int> ll_ladder(const SpectrumResult& spectrum);

enum class ContactMode { Exact, NearestMu };

// Two-photon contact amplitude A(0) of a K=0 eigenstate, reconstructed
// through the virtual-polariton channel. Exact mode reproduces the n=0
// entry of the extracted photon-photon amplitude.
std::complex<double> photon_contact_amplitude(const TwoExcitationState& state,
                                              const ModelParams& p, ContactMode mode);

// e_mu = (1/2) sum_s g_s(mu) C(s) for all signed mu.
Eigen::VectorXcd exciton_projection(const TwoExcitationState& state, const ModelParams& p);

} // namespace bipol
