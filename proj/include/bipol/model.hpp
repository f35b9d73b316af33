#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bipol {

// Thrown when a scenario/parameter set violates a model invariant.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on eigensolver or other numerical failures.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

enum class PotentialKind { None, NNA, VdW };

// Test hook: "Off" treats exciton pairs as unconstrained bosons so the
// noninteracting spectrum factorizes exactly.
enum class ConstraintMode { Blockade, Off };

// All physical constants and discretization settings. Unit system:
// hbar = 1, energies in units of the collective coupling G, lengths in
// units of the lattice constant a (unless overridden in a scenario file).
struct ModelParams {
  int n_sites = 100;          // N, even
  double lattice_const = 1.0; // a
  double e0 = 1000.0;         // atomic transition energy E_0
  double hop_t = 0.01;        // nearest-neighbor exciton hopping t
  double coupling_G = 1.0;    // collective coupling G = g sqrt(N)
  double detuning = 0.1;      // delta = E_p(0) - E_0
  double c_hbar = 0.0;        // photon dispersion slope c*hbar; <=0 -> default
  int blockade_cells = 0;     // l = r_B / a
  double d_strength = 0.0;    // dynamical interaction D at the reference separation
  PotentialKind potential_kind = PotentialKind::None;
  int k_total_index = 0;      // nu', total momentum K = 2 pi nu' / (N a)

  ConstraintMode constraint = ConstraintMode::Blockade;
  int exclusion_halfwidth = -1; // override of the excluded half-width; -1 -> blockade_cells
  double photon_offset = 0.0;   // rigid shift of the photon dispersion (test use)

  // derived quantities
  double q_perp = 0.0; // (e0 + detuning) / c_hbar
  double g_single = 0.0;

  int ell() const {
    return exclusion_halfwidth >= 0 ? exclusion_halfwidth : blockade_cells;
  }
  double total_momentum() const; // K in 1/a units, wrapped
};

// Validates invariants, fills derived fields, and collects non-fatal warnings.
ModelParams derive_params(ModelParams raw, std::vector<std::string>* warnings = nullptr);

// Default c*hbar placing the strong-coupling edge at a*k_SC = pi/2.
double default_c_hbar(double e0, double coupling_G, double lattice_const);

// Wrap a wave number into the first Brillouin zone (-pi/a, pi/a].
double wrap_to_bz(double k, double lattice_const);

// Wrap a grid index into (-N/2, N/2].
int wrap_index(int nu, int n_sites);

// Free and reduced (blockade) wave-vector sets.
struct WaveGrid {
  std::vector<double> free_k;       // k_nu, nu = -N/2+1 .. N/2
  std::vector<double> reduced_mu;   // half-odd-integer indices mu
  std::vector<double> reduced_k;    // kappa_mu = 2 pi |mu| / (N a - 2 r_B)
};
WaveGrid make_wave_grid(const ModelParams& p);

// Dispersions. k is wrapped internally.
double photon_energy(double k, const ModelParams& p);
double exciton_energy(double k, const ModelParams& p);

struct BranchPair {
  double lower;
  double upper;
};
BranchPair polariton_branches(double k, const ModelParams& p);

enum class Branch { Photon, Exciton, Lower, Upper };

double branch_energy(Branch b, double k, const ModelParams& p);

// E_i(K/2 + k) + E_j(K/2 - k) with both momenta wrapped to the BZ.
double pair_energy(Branch i, Branch j, double K, double k, const ModelParams& p);

// k_SC = 2 sqrt(E_0 G) / (c hbar)
double strong_coupling_edge(const ModelParams& p);

} // namespace bipol
