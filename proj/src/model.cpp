#include "bipol/model.hpp"

#include <numbers>

namespace bipol {

namespace {
constexpr double kPi = std::numbers::pi;
}

double default_c_hbar(double e0, double coupling_G, double lattice_const) {
  return 4.0 * std::sqrt(e0 * coupling_G) * lattice_const / kPi;
}

ModelParams derive_params(ModelParams p, std::vector<std::string>* warnings) {
  if (p.n_sites < 8) throw config_error("n_sites must be >= 8");
  if (p.n_sites % 2 != 0) throw config_error("n_sites must be even");
  if (p.lattice_const <= 0.0) throw config_error("lattice_const must be positive");
  if (p.coupling_G <= 0.0) throw config_error("coupling_G must be positive");
  if (p.blockade_cells < 0) throw config_error("blockade_cells must be >= 0");
  if (p.constraint == ConstraintMode::Blockade && p.n_sites - 2 * p.ell() < 4)
    throw config_error("N - 2l >= 4 violated (reduced wave-vector set empty)");
  if (std::abs(p.k_total_index) > p.n_sites)
    throw config_error("k_total_index must satisfy |nu'| <= N");

  if (p.c_hbar <= 0.0)
    p.c_hbar = default_c_hbar(p.e0, p.coupling_G, p.lattice_const);
  p.q_perp = (p.e0 + p.detuning) / p.c_hbar;
  if (p.q_perp <= 0.0) throw config_error("q_perp must be positive (e0 + detuning > 0)");
  p.g_single = p.coupling_G / std::sqrt(static_cast<double>(p.n_sites));

  if (warnings && std::abs(p.hop_t) > 0.1 * p.coupling_G)
    warnings->push_back("hop_t exceeds 0.1*G; the model assumes t << G");
  return p;
}

double ModelParams::total_momentum() const {
  const int nu = wrap_index(k_total_index, n_sites);
  return 2.0 * kPi * nu / (n_sites * lattice_const);
}

double wrap_to_bz(double k, double a) {
  const double period = 2.0 * kPi / a;
  double w = k - period * std::floor(k / period + 0.5);
  // floor(...) maps the lower edge -pi/a onto itself; fold it to +pi/a
  if (w <= -kPi / a + 1e-12 * period) w += period;
  return w;
}

int wrap_index(int nu, int n) {
  int m = nu % n;
  if (m <= -n / 2) m += n;
  if (m > n / 2) m -= n;
  return m;
}

WaveGrid make_wave_grid(const ModelParams& p) {
  WaveGrid g;
  const int n = p.n_sites;
  const double a = p.lattice_const;
  g.free_k.reserve(n);
  for (int nu = -n / 2 + 1; nu <= n / 2; ++nu)
    g.free_k.push_back(2.0 * kPi * nu / (n * a));

  const int ell = p.ell();
  const double reduced_len = n * a - 2.0 * ell * a;
  // mu = -(N-1)/2 + l ... (N-1)/2 - l, step 1 (half-odd integers for even N)
  const double mu_max = 0.5 * (n - 1) - ell;
  for (double mu = -mu_max; mu <= mu_max + 0.25; mu += 1.0) {
    g.reduced_mu.push_back(mu);
    g.reduced_k.push_back(2.0 * kPi * std::abs(mu) / reduced_len);
  }
  if (g.reduced_mu.empty()) throw config_error("reduced wave-vector set is empty");
  return g;
}

double photon_energy(double k, const ModelParams& p) {
  const double kw = wrap_to_bz(k, p.lattice_const);
  return p.c_hbar * std::sqrt(kw * kw + p.q_perp * p.q_perp) + p.photon_offset;
}

double exciton_energy(double k, const ModelParams& p) {
  return p.e0 + 2.0 * p.hop_t * std::cos(p.lattice_const * k);
}

BranchPair polariton_branches(double k, const ModelParams& p) {
  const double ee = exciton_energy(k, p);
  const double ep = photon_energy(k, p);
  const double s = std::sqrt((ee - ep) * (ee - ep) + 4.0 * p.coupling_G * p.coupling_G);
  return {0.5 * (ee + ep - s), 0.5 * (ee + ep + s)};
}

double branch_energy(Branch b, double k, const ModelParams& p) {
  switch (b) {
    case Branch::Photon: return photon_energy(k, p);
    case Branch::Exciton: return exciton_energy(k, p);
    case Branch::Lower: return polariton_branches(k, p).lower;
    case Branch::Upper: return polariton_branches(k, p).upper;
  }
  throw config_error("unknown branch label");
}

double pair_energy(Branch i, Branch j, double K, double k, const ModelParams& p) {
  const double q1 = wrap_to_bz(0.5 * K + k, p.lattice_const);
  const double q2 = wrap_to_bz(0.5 * K - k, p.lattice_const);
  return branch_energy(i, q1, p) + branch_energy(j, q2, p);
}

double strong_coupling_edge(const ModelParams& p) {
  return 2.0 * std::sqrt(p.e0 * p.coupling_G) / p.c_hbar;
}

} // namespace bipol
