#include "bipol/virtual_basis.hpp"

#include "bipol/analysis.hpp"

#include <numbers>

namespace bipol {

namespace {
constexpr double kPi = std::numbers::pi;

struct TwoLevel {
  double e_lo, e_hi;
  double xa_lo, xb_lo, xa_hi, xb_hi;
};

// Diagonalize [[2 E_p, sqrt(2) G], [sqrt(2) G, E_p + E_e]].
TwoLevel hybridize(double ep, double ee, double g) {
  const double diag_a = 2.0 * ep;
  const double diag_b = ep + ee;
  const double c = std::sqrt(2.0) * g;
  const double avg = 0.5 * (diag_a + diag_b);
  const double half = 0.5 * (diag_a - diag_b);
  const double s = std::sqrt(half * half + c * c);
  TwoLevel out;
  out.e_lo = avg - s;
  out.e_hi = avg + s;
  // eigenvector (x_alpha, x_beta): x_alpha = lambda - (E_p + E_e), x_beta = c
  auto fill = [&](double lambda, double& xa, double& xb) {
    double a = lambda - diag_b;
    double b = c;
    const double norm = std::hypot(a, b);
    xa = a / norm;
    xb = b / norm;
  };
  fill(out.e_lo, out.xa_lo, out.xb_lo);
  fill(out.e_hi, out.xa_hi, out.xb_hi);
  return out;
}
} // namespace

int VirtualPolaritonBasis::index_of_nu(int nu_val) const {
  const int n = static_cast<int>(nu.size());
  return nu_val + n / 2 - 1;
}

VirtualPolaritonBasis virtual_pair_basis(const ModelParams& p) {
  const int n = p.n_sites;
  VirtualPolaritonBasis b;
  b.nu.reserve(n);
  b.e_lower.resize(n);
  b.e_upper.resize(n);
  b.x_alpha_l.resize(n);
  b.x_beta_l.resize(n);
  b.x_alpha_u.resize(n);
  b.x_beta_u.resize(n);
  for (int nu = -n / 2 + 1; nu <= n / 2; ++nu) {
    const double k = 2.0 * kPi * nu / (n * p.lattice_const);
    const auto lv = hybridize(photon_energy(k, p), exciton_energy(k, p), p.coupling_G);
    const int i = nu + n / 2 - 1;
    b.nu.push_back(nu);
    b.e_lower[i] = lv.e_lo;
    b.e_upper[i] = lv.e_hi;
    b.x_alpha_l[i] = lv.xa_lo;
    b.x_beta_l[i] = lv.xb_lo;
    b.x_alpha_u[i] = lv.xa_hi;
    b.x_beta_u[i] = lv.xb_hi;
  }
  const auto grid = reduced_grid(p.n_sites, p.ell(), p.lattice_const);
  b.e_exciton.resize(grid.size());
  for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
    b.mu.push_back(grid[i].first);
    b.e_exciton[i] = exciton_level(grid[i].first, p);
  }
  return b;
}

double lambda_overlap_scale(const ModelParams& p) {
  const int n = p.n_sites;
  const int ell = p.ell();
  // first (nu, mu) pair with comfortably regular denominators
  for (int nu = 1; nu <= n / 2; ++nu) {
    for (double mu = 0.5; mu <= 0.5 * (n - 1) - ell; mu += 1.0) {
      const double d1 = kPi * nu / n + kPi * mu / (n - 2 * ell);
      const double d2 = kPi * nu / n - kPi * mu / (n - 2 * ell);
      if (std::min(std::abs(std::sin(d1)), std::abs(std::sin(d2))) < 0.2) continue;
      const double closed = std::cos(kPi * nu * (2.0 * ell + 1.0) / n + kPi * mu / (n - 2 * ell)) /
                                (2.0 * std::sin(d1)) -
                            std::cos(kPi * nu * (2.0 * ell + 1.0) / n - kPi * mu / (n - 2 * ell)) /
                                (2.0 * std::sin(d2));
      double overlap = 0.0;
      for (int s = sep_min(n); s <= sep_max(n); ++s)
        overlap += g_amplitude(s, mu, p) * std::cos(2.0 * kPi * nu * s / n);
      if (std::abs(overlap) < 1e-8) continue;
      return closed / overlap;
    }
  }
  throw numeric_error("lambda_overlap_scale: no regular matching point found");
}

double lambda_coupling(int nu, double mu, const ModelParams& p) {
  const int n = p.n_sites;
  const int ell = p.ell();
  const double u = kPi * nu / static_cast<double>(n);
  const double w = kPi * std::abs(mu) / static_cast<double>(n - 2 * ell);
  const double s1 = std::sin(u + w);
  const double s2 = std::sin(u - w);
  if (std::min(std::abs(s1), std::abs(s2)) < 1e-9) {
    // removable singularity: evaluate the defining overlap sum instead
    const double scale = lambda_overlap_scale(p);
    double overlap = 0.0;
    for (int s = sep_min(n); s <= sep_max(n); ++s)
      overlap += g_amplitude(s, mu, p) * std::cos(2.0 * kPi * nu * s / n);
    return scale * overlap;
  }
  const double phase = kPi * nu * (2.0 * ell + 1.0) / n;
  return std::cos(phase + w) / (2.0 * s1) - std::cos(phase - w) / (2.0 * s2);
}

double blockade_mask_dft(double k, const ModelParams& p) {
  double acc = 1.0;
  for (int j = 1; j <= p.ell(); ++j) acc += 2.0 * std::cos(k * p.lattice_const * j);
  return acc / p.n_sites;
}

double f_kernel(int nu, int nu_prime, const ModelParams& p) {
  const int n = p.n_sites;
  auto theta_hat = [&](int d) {
    double acc = 1.0;
    for (int j = 1; j <= p.ell(); ++j) acc += 2.0 * std::cos(2.0 * kPi * d * j / n);
    return acc;
  };
  double v = -theta_hat(nu - nu_prime) - theta_hat(nu + nu_prime);
  if (wrap_index(nu - nu_prime, n) == 0) v += n;
  if (wrap_index(nu + nu_prime, n) == 0) v += n;
  return v;
}

PeSystem solve_pe_system(const ModelParams& p) {
  const int n = p.n_sites;
  const int ell = p.ell();
  const auto basis = virtual_pair_basis(p);

  PeSystem sys;
  for (int k = 0; k <= n / 2; ++k) sys.kappa.push_back(k);
  for (double mu = 0.5; mu <= 0.5 * (n - 1) - ell + 0.25; mu += 1.0) sys.mu_abs.push_back(mu);
  const int nk = static_cast<int>(sys.kappa.size());
  const int nm = static_cast<int>(sys.mu_abs.size());
  sys.l_off = 0;
  sys.u_off = nk;
  sys.e_off = 2 * nk;
  sys.dim = 2 * nk + nm;

  sys.h = Eigen::MatrixXd::Zero(sys.dim, sys.dim);
  const double c0 = p.coupling_G / std::sqrt(static_cast<double>(n) * (n - 2 * ell));
  for (int j = 0; j < nk; ++j) {
    const int nu = sys.kappa[j];
    const int i = basis.index_of_nu(nu);
    sys.h(sys.l_off + j, sys.l_off + j) = basis.e_lower[i];
    sys.h(sys.u_off + j, sys.u_off + j) = basis.e_upper[i];
    // +-kappa pairs couple with weight 2 sqrt(2), self-paired points with 2
    const double w = (nu == 0 || nu == n / 2) ? 2.0 : 2.0 * std::sqrt(2.0);
    for (int m = 0; m < nm; ++m) {
      const double lam = lambda_coupling(nu, sys.mu_abs[m], p);
      sys.h(sys.l_off + j, sys.e_off + m) = w * c0 * basis.x_beta_l[i] * lam;
      sys.h(sys.e_off + m, sys.l_off + j) = sys.h(sys.l_off + j, sys.e_off + m);
      sys.h(sys.u_off + j, sys.e_off + m) = w * c0 * basis.x_beta_u[i] * lam;
      sys.h(sys.e_off + m, sys.u_off + j) = sys.h(sys.u_off + j, sys.e_off + m);
    }
  }
  for (int m = 0; m < nm; ++m)
    sys.h(sys.e_off + m, sys.e_off + m) = exciton_level(sys.mu_abs[m], p);

  const auto eig = eigensolve(sys.h);
  sys.energies = eig.values;
  sys.vectors = eig.vectors;
  return sys;
}

PeSystem::Amplitudes PeSystem::amplitudes(int state, const ModelParams& p) const {
  const int n = p.n_sites;
  Amplitudes amp;
  amp.p_lower.setZero(n);
  amp.p_upper.setZero(n);
  for (int nu = -n / 2 + 1; nu <= n / 2; ++nu) amp.nu.push_back(nu);
  const Eigen::VectorXd v = vectors.col(state);
  for (int j = 0; j < static_cast<int>(kappa.size()); ++j) {
    const int k = kappa[j];
    const double share = (k == 0 || k == n / 2) ? 1.0 : 1.0 / std::sqrt(2.0);
    for (int sign : {+1, -1}) {
      const int nu = sign * k;
      if (nu < -n / 2 + 1 || (sign < 0 && (k == 0 || k == n / 2))) continue;
      const int i = nu + n / 2 - 1;
      amp.p_lower[i] = v[l_off + j] * share;
      amp.p_upper[i] = v[u_off + j] * share;
    }
  }
  for (int m = 0; m < static_cast<int>(mu_abs.size()); ++m) {
    amp.mu.push_back(-mu_abs[m]);
    amp.mu.push_back(mu_abs[m]);
    amp.e.conservativeResize(amp.mu.size());
    amp.e[amp.mu.size() - 2] = 0.5 * v[e_off + m];
    amp.e[amp.mu.size() - 1] = 0.5 * v[e_off + m];
  }
  return amp;
}

std::vector<double> effective_wavevectors(const ModelParams& p) {
  const int n = p.n_sites;
  const int ell = p.ell();
  const double a = p.lattice_const;
  std::vector<double> out;
  const int count = n / 2 - ell;
  const double prefac = (n - 2.0 * ell - 1.0) / (n - 2.0 * ell);
  for (int rho = 1; rho <= count; ++rho)
    out.push_back(prefac * kPi * (rho - 1.0) / (a * (0.5 * n - ell - 1.0)));
  return out;
}

std::vector<int> ll_ladder(const SpectrumResult& spectrum) {
  const ModelParams& p = spectrum.params;
  const auto k_eff = effective_wavevectors(p);
  const int count = static_cast<int>(k_eff.size());
  std::vector<int> window;
  for (int i = 0; i < static_cast<int>(spectrum.states.size()); ++i)
    if (spectrum.states[i].energy <= spectrum.windows.ll_max + 1e-10) window.push_back(i);

  // dominant reduced-grid component of each window state: band states carry
  // one sharp |mu| = rho - 1/2 peak, split-off and intruder states do not
  const auto grid = reduced_grid(p.n_sites, p.ell(), p.lattice_const);
  std::vector<int> dominant_rho(window.size(), -1);
  std::vector<double> share(window.size(), 0.0);
  for (size_t j = 0; j < window.size(); ++j) {
    const auto e = exciton_projection(spectrum.states[window[j]].state, p);
    double total = 0.0;
    int best = 0;
    for (int m = 0; m < e.size(); ++m) {
      total += std::norm(e[m]);
      if (std::abs(e[m]) > std::abs(e[best])) best = m;
    }
    if (total <= 0.0) continue;
    share[j] = 2.0 * std::norm(e[best]) / total; // +-mu carry equal weight
    dominant_rho[j] = static_cast<int>(std::lround(std::abs(grid[best].first) + 0.5));
  }

  std::vector<int> assigned(count, -1);
  std::vector<bool> used(window.size(), false);
  for (int rho = 1; rho <= count; ++rho) {
    int best = -1;
    for (size_t j = 0; j < window.size(); ++j)
      if (!used[j] && dominant_rho[j] == rho && share[j] >= 0.5 &&
          (best < 0 || share[j] > share[best]))
        best = static_cast<int>(j);
    if (best >= 0) {
      assigned[rho - 1] = window[best];
      used[best] = true;
    }
  }
  // fill the remaining rungs by nearest energy, keeping the ladder monotone
  for (int rho = 1; rho <= count; ++rho) {
    if (assigned[rho - 1] >= 0) continue;
    const double target = 2.0 * polariton_branches(k_eff[rho - 1], p).lower;
    double floor_e = -1e300, ceil_e = 1e300;
    for (int r = rho - 1; r >= 1; --r)
      if (assigned[r - 1] >= 0) {
        floor_e = spectrum.states[assigned[r - 1]].energy;
        break;
      }
    for (int r = rho + 1; r <= count; ++r)
      if (assigned[r - 1] >= 0) {
        ceil_e = spectrum.states[assigned[r - 1]].energy;
        break;
      }
    int best = -1;
    double best_d = 1e300;
    for (size_t j = 0; j < window.size(); ++j) {
      if (used[j]) continue;
      const double e = spectrum.states[window[j]].energy;
      if (e <= floor_e || e >= ceil_e) continue;
      const double d = std::abs(e - target);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0) {
      assigned[rho - 1] = window[best];
      used[best] = true;
    }
  }

  std::vector<int> ladder;
  for (int idx : assigned)
    if (idx >= 0) ladder.push_back(idx);
  std::sort(ladder.begin(), ladder.end());
  return ladder;
}

Eigen::VectorXcd exciton_projection(const TwoExcitationState& state, const ModelParams& p) {
  const auto grid = reduced_grid(p.n_sites, p.ell(), p.lattice_const);
  Eigen::VectorXcd e(grid.size());
  for (int m = 0; m < static_cast<int>(grid.size()); ++m) {
    std::complex<double> acc = 0.0;
    for (int s = sep_min(p.n_sites); s <= sep_max(p.n_sites); ++s)
      acc += g_amplitude(s, grid[m].first, p) * state.c_n[sep_index(s, p.n_sites)];
    e[m] = 0.5 * acc;
  }
  return e;
}

std::complex<double> photon_contact_amplitude(const TwoExcitationState& state,
                                              const ModelParams& p, ContactMode mode) {
  const int n = p.n_sites;
  const int ell = p.ell();
  const auto basis = virtual_pair_basis(p);
  const auto grid = reduced_grid(n, ell, p.lattice_const);
  const Eigen::VectorXcd e = exciton_projection(state, p);

  if (e.cwiseAbs().maxCoeff() < 1e-14) return 0.0; // no exciton-pair content

  // structure factor per nu: sum over signed mu of Lambda e_mu (exact mode),
  // or the dominant bare exciton level only (nearest_mu mode)
  int mu_star = 0;
  if (mode == ContactMode::NearestMu) {
    for (int m = 1; m < e.size(); ++m)
      if (std::abs(e[m]) > std::abs(e[mu_star])) mu_star = m;
  }
  const double x_gamma = std::sqrt(state.w_cc);

  std::complex<double> total = 0.0;
  for (int nu = -n / 2 + 1; nu <= n / 2; ++nu) {
    const int i = basis.index_of_nu(nu);
    std::complex<double> src = 0.0;
    if (mode == ContactMode::Exact) {
      for (int m = 0; m < static_cast<int>(grid.size()); ++m)
        src += lambda_coupling(nu, grid[m].first, p) * e[m];
    } else {
      src = x_gamma * lambda_coupling(nu, grid[mu_star].first, p);
    }
    total += basis.x_alpha_l[i] * basis.x_beta_l[i] / (state.energy - basis.e_lower[i]) * src;
    total += basis.x_alpha_u[i] * basis.x_beta_u[i] / (state.energy - basis.e_upper[i]) * src;
  }
  return 2.0 * p.coupling_G / (n * std::sqrt(static_cast<double>(n - 2 * ell))) * total;
}

} // namespace bipol
