#pragma once

#include <string>
#include <vector>

#include "bipol/hamiltonian.hpp"

namespace bipol {

enum class BunchFlag { None, Bunching, Antibunching };

std::string to_string(BunchFlag f);

// Relative figure of merit for the two-photon amplitude.
// Bunching: |A(0)| is the strict global maximum of |A(n)|; then
// delta_a = (|A(0)| - <|A(n)|>) / <|A(n)|>, the mean running over all N
// separations. Antibunching: strict global minimum; delta_a = 0.
struct BunchingResult {
  double delta_a = 0.0;
  BunchFlag flag = BunchFlag::None;
};
BunchingResult bunching_figure(const TwoExcitationState& state);

enum class BandClass { LL, LU, UU, Bound, Gap };
std::string to_string(BandClass c);

struct BandWindows {
  double ll_min, ll_max;
  double lu_min, lu_max; // LU and UL merged
  double uu_min, uu_max;
};
// Noninteracting two-polariton band edges on the discrete grid at total
// momentum index nu'.
BandWindows band_windows(const ModelParams& p, int nu_total);

struct Classification {
  std::vector<BandClass> matches; // all windows containing the energy
  std::string label() const;      // "LL", "LL|LU", "bound", "gap", ...
  bool is(BandClass c) const;
};
Classification classify_energy(double energy, const BandWindows& w, double tol);

// Squared LL-eigenvector components (A0^2, B0^2, C0^2) of the noninteracting
// 3x3 block at wave number k.
struct ComponentWeights {
  double a2, b2, c2;
};
ComponentWeights component_weights(double k, const ModelParams& p);

// Full sorted spectrum of one momentum sector with per-state analysis.
struct StateRecord {
  double energy = 0.0;
  TwoExcitationState state;
  Classification cls;
  double delta_a = 0.0;
  BunchFlag flag = BunchFlag::None;
};

struct SpectrumResult {
  ModelParams params;
  int nu_total = 0;
  BandWindows windows{};
  std::vector<StateRecord> states; // ascending energy
};

SpectrumResult compute_spectrum(const ModelParams& p, int nu_total);

} // namespace bipol
