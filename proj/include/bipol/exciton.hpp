#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bipol/model.hpp"

namespace bipol {

// One analytic two-exciton eigenstate of the blockade-constrained chain.
struct ExcitonEigenstate {
  double mu = 0.0;     // half-odd-integer state index (|mu| labels the level)
  double kappa = 0.0;  // reduced wave number kappa_mu
  double energy = 0.0; // 2 E_0 + 4 t cos(a kappa_mu)
  // amplitude over signed separations n = -N/2+1 .. N/2 (index n + N/2 - 1)
  Eigen::VectorXd amplitude;
};

// Signed separation range helpers shared by the two-excitation machinery.
inline int sep_min(int n_sites) { return -n_sites / 2 + 1; }
inline int sep_max(int n_sites) { return n_sites / 2; }
inline int sep_index(int n, int n_sites) { return n - sep_min(n_sites); }
// minimal-image |separation| on the ring
int ring_distance(int n, int n_sites);

// (mu, kappa_mu) pairs of Eq.-style reduced grid; throws if empty.
std::vector<std::pair<double, double>> reduced_grid(int n_sites, int ell, double lattice_const);

// Single amplitude g_n(mu) = sqrt(2) [1 - theta(n)] sin(kappa_mu (|n| - l)) / sqrt(N - 2l).
double g_amplitude(int n, double mu, const ModelParams& p);

// 2 E_0 + 4 t cos(a kappa_mu)
double exciton_level(double mu, const ModelParams& p);

// Full analytic eigenstate set (one entry per signed mu).
std::vector<ExcitonEigenstate> analytic_two_exciton(const ModelParams& p);

// Discrete Fourier transform of g_n(mu) over the free grid (authoritative
// definition of the wave-vector amplitudes). Entry nu corresponds to k_nu.
Eigen::VectorXcd exciton_amplitude_k(double mu, const ModelParams& p);

// On-grid closed form of the transform; matches exciton_amplitude_k up to one
// global scale per (N, l).
double exciton_amplitude_k_closed(int nu, double mu, const ModelParams& p);

// Brute-force oracle: relative-coordinate matrix on the signed ring with the
// blocked rows/columns deleted.
struct BruteForceResult {
  std::vector<int> separations;      // retained signed separations, ascending
  Eigen::VectorXd energies;          // ascending
  Eigen::MatrixXd vectors;           // columns; first nonzero component positive
  std::vector<bool> even_parity;     // v(n) == v(-n) within 1e-9
};
BruteForceResult brute_force_two_exciton(const ModelParams& p);

} // namespace bipol
