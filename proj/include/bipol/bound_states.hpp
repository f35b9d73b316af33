#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipol/analysis.hpp"

namespace bipol {

// Biexciton reference levels 2 E_0 + D(n), one per distinct separation with
// a nonvanishing interaction.
std::vector<double> biexciton_levels(const ModelParams& p);

// Photon-channel dressing from eliminating (A, B_S, B_A) at one relative wave
// number: phi = 2 G^2 (E - E_pp) / Delta. `pole` marks a vanishing
// elimination denominator (caller must bracket around it).
struct PhiValue {
  double phi = 0.0;
  double delta = 0.0;
  bool pole = false;
};
PhiValue phi(double energy, int nu_total, double k, const ModelParams& p);

// Separable nearest-neighbor determinant at the reference separation 2l+1,
// evaluated through the blockade-projected resolvent so that its zeros agree
// with diagonalization. Returns the symmetric (physical) bracket, the
// asymmetric one (discarded for physics), and their product.
struct DeterminantValue {
  double symmetric = 0.0;
  double asymmetric = 0.0;
  double determinant = 0.0;
  bool pole = false;
};
DeterminantValue bipolariton_determinant(double energy, int nu_total, const ModelParams& p);

struct BoundStateRoot {
  double root_energy = 0.0;
  double matched_eigenvalue = 0.0;
  double match_residual = 0.0;
  int state_index = -1;
  std::string classification; // "below_LL" or "in_gap"
  double delta_a = 0.0;
  BunchFlag flag = BunchFlag::None;
};

struct BoundStateReport {
  int nu_total = 0;
  double window_lo = 0.0, window_hi = 0.0;
  std::string regime; // strong_D / weak_D, boundary |D| = 1.5 G
  std::vector<BoundStateRoot> roots;
};

// Scan the window for sign changes of the symmetric bracket (pole-aware),
// bisect to 1e-10 G, and match each root against diagonalization. An empty
// window is a valid (empty) report.
BoundStateReport find_bipolariton(int nu_total, double window_lo, double window_hi,
                                  const ModelParams& p);

struct GapState {
  int state_index = -1;
  double energy = 0.0;
  double delta_a = 0.0;
  BunchFlag flag = BunchFlag::None;
  bool kinematic = false; // bound by the constraint alone (D = 0)
  double gap_lo = 0.0, gap_hi = 0.0;
};

// Eigenstates strictly between the LL band top and the LU band bottom.
std::vector<GapState> detect_gap_states(const SpectrumResult& spectrum);

} // namespace bipol
