#include "bipol/exciton.hpp"

#include <algorithm>
#include <numbers>

namespace bipol {

namespace {
constexpr double kPi = std::numbers::pi;
}

int ring_distance(int n, int n_sites) {
  int m = n % n_sites;
  if (m < 0) m += n_sites;
  return std::min(m, n_sites - m);
}

std::vector<std::pair<double, double>> reduced_grid(int n_sites, int ell, double a) {
  if (n_sites - 2 * ell < 4) throw config_error("N - 2l >= 4 violated (empty reduced grid)");
  std::vector<std::pair<double, double>> out;
  const double len = n_sites * a - 2.0 * ell * a;
  const double mu_max = 0.5 * (n_sites - 1) - ell;
  for (double mu = -mu_max; mu <= mu_max + 0.25; mu += 1.0)
    out.emplace_back(mu, 2.0 * kPi * std::abs(mu) / len);
  return out;
}

double g_amplitude(int n, double mu, const ModelParams& p) {
  const int ell = p.ell();
  const int dist = ring_distance(n, p.n_sites);
  if (dist <= ell) return 0.0;
  const double kappa = 2.0 * kPi * std::abs(mu) /
                       (p.n_sites * p.lattice_const - 2.0 * ell * p.lattice_const);
  return std::sqrt(2.0 / (p.n_sites - 2 * ell)) *
         std::sin(kappa * p.lattice_const * (dist - ell));
}

double exciton_level(double mu, const ModelParams& p) {
  const int ell = p.ell();
  const double kappa = 2.0 * kPi * std::abs(mu) /
                       (p.n_sites * p.lattice_const - 2.0 * ell * p.lattice_const);
  return 2.0 * p.e0 + 4.0 * p.hop_t * std::cos(p.lattice_const * kappa);
}

std::vector<ExcitonEigenstate> analytic_two_exciton(const ModelParams& p) {
  const auto grid = reduced_grid(p.n_sites, p.ell(), p.lattice_const);
  std::vector<ExcitonEigenstate> out;
  out.reserve(grid.size());
  for (const auto& [mu, kappa] : grid) {
    ExcitonEigenstate st;
    st.mu = mu;
    st.kappa = kappa;
    st.energy = exciton_level(mu, p);
    st.amplitude.resize(p.n_sites);
    for (int n = sep_min(p.n_sites); n <= sep_max(p.n_sites); ++n)
      st.amplitude[sep_index(n, p.n_sites)] = g_amplitude(n, mu, p);
    out.push_back(std::move(st));
  }
  return out;
}

Eigen::VectorXcd exciton_amplitude_k(double mu, const ModelParams& p) {
  const int n_sites = p.n_sites;
  Eigen::VectorXcd out(n_sites);
  for (int nu = -n_sites / 2 + 1; nu <= n_sites / 2; ++nu) {
    std::complex<double> acc = 0.0;
    for (int n = sep_min(n_sites); n <= sep_max(n_sites); ++n) {
      const double phase = -2.0 * kPi * nu * n / n_sites;
      acc += g_amplitude(n, mu, p) * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    out[nu + n_sites / 2 - 1] = acc;
  }
  return out;
}

double exciton_amplitude_k_closed(int nu, double mu, const ModelParams& p) {
  // On the grid k_nu the sin(a k N/2) term of the printed transform vanishes
  // (k_nu N a / 2 = pi nu), leaving sin(a kappa) cos(k r_B) / (cos(a k) - cos(a kappa)).
  const int ell = p.ell();
  const double k = 2.0 * kPi * nu / p.n_sites; // a k
  const double kappa = 2.0 * kPi * std::abs(mu) / (p.n_sites - 2.0 * ell); // a kappa
  const double den = std::cos(k) - std::cos(kappa);
  return std::sin(kappa) * std::cos(k * ell) / den;
}

BruteForceResult brute_force_two_exciton(const ModelParams& p) {
  if (p.n_sites > 256) throw config_error("brute_force_two_exciton: N > 256 refused");
  const int n_sites = p.n_sites;
  const int ell = p.ell();

  BruteForceResult res;
  for (int n = sep_min(n_sites); n <= sep_max(n_sites); ++n)
    if (ring_distance(n, n_sites) > ell) res.separations.push_back(n);

  const int dim = static_cast<int>(res.separations.size());
  std::vector<int> pos(n_sites, -1);
  for (int i = 0; i < dim; ++i) pos[sep_index(res.separations[i], n_sites)] = i;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    h(i, i) = 2.0 * p.e0;
    const int n = res.separations[i];
    for (int step : {+1, -1}) {
      int m = n + step;
      if (m < sep_min(n_sites)) m += n_sites;
      if (m > sep_max(n_sites)) m -= n_sites;
      const int j = pos[sep_index(m, n_sites)];
      if (j >= 0) h(i, j) += 2.0 * p.hop_t;
    }
  }

  // Block-diagonalize over n -> -n parity so degenerate levels (t = 0) still
  // get definite labels. Distinct |n| classes; N/2 is its own mirror.
  std::vector<int> dists;
  for (int r = ell + 1; r <= n_sites / 2; ++r) dists.push_back(r);
  const int n_even = static_cast<int>(dists.size());
  const int n_odd = n_even - 1; // no odd state at |n| = N/2

  Eigen::MatrixXd p_even = Eigen::MatrixXd::Zero(dim, n_even);
  Eigen::MatrixXd p_odd = Eigen::MatrixXd::Zero(dim, std::max(n_odd, 0));
  for (int c = 0; c < n_even; ++c) {
    const int r = dists[c];
    if (r == n_sites / 2) {
      p_even(pos[sep_index(r, n_sites)], c) = 1.0;
    } else {
      p_even(pos[sep_index(r, n_sites)], c) = 1.0 / std::sqrt(2.0);
      p_even(pos[sep_index(-r, n_sites)], c) = 1.0 / std::sqrt(2.0);
      if (c < n_odd) {
        p_odd(pos[sep_index(r, n_sites)], c) = 1.0 / std::sqrt(2.0);
        p_odd(pos[sep_index(-r, n_sites)], c) = -1.0 / std::sqrt(2.0);
      }
    }
  }

  struct Entry { double e; Eigen::VectorXd v; bool even; };
  std::vector<Entry> entries;
  auto solve_block = [&](const Eigen::MatrixXd& proj, bool even) {
    if (proj.cols() == 0) return;
    Eigen::MatrixXd hb = proj.transpose() * h * proj;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hb);
    if (solver.info() != Eigen::Success)
      throw numeric_error("brute_force_two_exciton: eigensolver failed");
    for (int c = 0; c < hb.rows(); ++c) {
      Eigen::VectorXd v = proj * solver.eigenvectors().col(c);
      for (int i = 0; i < dim; ++i) {
        if (std::abs(v[i]) > 1e-12) {
          if (v[i] < 0.0) v = -v;
          break;
        }
      }
      entries.push_back({solver.eigenvalues()[c], std::move(v), even});
    }
  };
  solve_block(p_even, true);
  solve_block(p_odd, false);
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.e < b.e; });

  res.energies.resize(dim);
  res.vectors.resize(dim, dim);
  res.even_parity.assign(dim, false);
  for (int c = 0; c < dim; ++c) {
    res.energies[c] = entries[c].e;
    res.vectors.col(c) = entries[c].v;
    res.even_parity[c] = entries[c].even;
  }
  return res;
}

} // namespace bipol
