#include "bipol/analysis.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace bipol {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string to_string(BunchFlag f) {
  switch (f) {
    case BunchFlag::None: return "none";
    case BunchFlag::Bunching: return "bunching";
    case BunchFlag::Antibunching: return "antibunching";
  }
  return "?";
}

std::string to_string(BandClass c) {
  switch (c) {
    case BandClass::LL: return "LL";
    case BandClass::LU: return "LU";
    case BandClass::UU: return "UU";
    case BandClass::Bound: return "bound";
    case BandClass::Gap: return "gap";
  }
  return "?";
}

BunchingResult bunching_figure(const TwoExcitationState& state) {
  const int n = static_cast<int>(state.a_n.size());
  const int i0 = sep_index(0, n);
  const double a0 = std::abs(state.a_n[i0]);
  double max_other = 0.0, min_other = std::numeric_limits<double>::infinity();
  double mean = 0.0, peak = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = std::abs(state.a_n[i]);
    mean += v;
    peak = std::max(peak, v);
    if (i == i0) continue;
    max_other = std::max(max_other, v);
    min_other = std::min(min_other, v);
  }
  mean /= n;
  if (peak <= 0.0) return {0.0, BunchFlag::None};
  const double tol = 1e-12 * peak; // strictness tolerance on max/min comparisons
  if (a0 > max_other + tol)
    return {(a0 - mean) / mean, BunchFlag::Bunching};
  if (a0 < min_other - tol) return {0.0, BunchFlag::Antibunching};
  return {0.0, BunchFlag::None};
}

BandWindows band_windows(const ModelParams& p, int nu_total) {
  const int n = p.n_sites;
  const int nup = wrap_index(nu_total, n);
  BandWindows w{};
  bool first = true;
  for (int j = 0; j < n; ++j) {
    const int t2 = (nup % 2 == 0) ? 2 * j - n + 2 : 2 * j - n + 1;
    const int nu1 = wrap_index((nup + t2) / 2, n);
    const int nu2 = wrap_index((nup - t2) / 2, n);
    const double k1 = 2.0 * kPi * nu1 / (n * p.lattice_const);
    const double k2 = 2.0 * kPi * nu2 / (n * p.lattice_const);
    const auto b1 = polariton_branches(k1, p);
    const auto b2 = polariton_branches(k2, p);
    const double ll = b1.lower + b2.lower;
    const double lu = std::min(b1.lower + b2.upper, b1.upper + b2.lower);
    const double lu2 = std::max(b1.lower + b2.upper, b1.upper + b2.lower);
    const double uu = b1.upper + b2.upper;
    if (first) {
      w.ll_min = w.ll_max = ll;
      w.lu_min = lu;
      w.lu_max = lu2;
      w.uu_min = w.uu_max = uu;
      first = false;
    } else {
      w.ll_min = std::min(w.ll_min, ll);
      w.ll_max = std::max(w.ll_max, ll);
      w.lu_min = std::min(w.lu_min, lu);
      w.lu_max = std::max(w.lu_max, lu2);
      w.uu_min = std::min(w.uu_min, uu);
      w.uu_max = std::max(w.uu_max, uu);
    }
  }
  return w;
}

std::string Classification::label() const {
  std::string out;
  for (const auto c : matches) {
    if (!out.empty()) out += "|";
    out += to_string(c);
  }
  return out;
}

bool Classification::is(BandClass c) const {
  return std::find(matches.begin(), matches.end(), c) != matches.end();
}

Classification classify_energy(double energy, const BandWindows& w, double tol) {
  Classification cls;
  if (energy >= w.ll_min - tol && energy <= w.ll_max + tol) cls.matches.push_back(BandClass::LL);
  if (energy >= w.lu_min - tol && energy <= w.lu_max + tol) cls.matches.push_back(BandClass::LU);
  if (energy >= w.uu_min - tol && energy <= w.uu_max + tol) cls.matches.push_back(BandClass::UU);
  if (!cls.matches.empty()) return cls;
  if (energy < w.ll_min) {
    cls.matches.push_back(BandClass::Bound);
  } else if (energy > w.ll_max && energy < w.lu_min) {
    cls.matches.push_back(BandClass::Gap);
  } else {
    // between higher bands; treat as a gap state of the nearest pair
    cls.matches.push_back(BandClass::Gap);
  }
  return cls;
}

ComponentWeights component_weights(double k, const ModelParams& p) {
  const double ep = photon_energy(k, p);
  const double ee = exciton_energy(k, p);
  const double c = std::sqrt(2.0) * p.coupling_G;
  Eigen::Matrix3d h;
  h << 2.0 * ep, c, 0.0, c, ep + ee, c, 0.0, c, 2.0 * ee;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(h);
  const Eigen::Vector3d v = solver.eigenvectors().col(0); // LL root
  return {v[0] * v[0], v[1] * v[1], v[2] * v[2]};
}

SpectrumResult compute_spectrum(const ModelParams& p, int nu_total) {
  SpectrumResult res;
  res.params = p;
  res.nu_total = wrap_index(nu_total, p.n_sites);
  res.windows = band_windows(p, nu_total);

  const auto fixed = build_fixed_k(p, nu_total);
  const auto eig = eigensolve(fixed.h);
  const double tol = 1e-9 * p.coupling_G;

  res.states.reserve(fixed.basis.dim);
  for (int i = 0; i < fixed.basis.dim; ++i) {
    StateRecord rec;
    rec.energy = eig.values[i];
    rec.state = extract_state(eig.vectors.col(i), eig.values[i], fixed.basis, p);
    rec.cls = classify_energy(rec.energy, res.windows, tol);
    const auto bun = bunching_figure(rec.state);
    rec.delta_a = bun.delta_a;
    rec.flag = bun.flag;
    res.states.push_back(std::move(rec));
  }
  return res;
}

} // namespace bipol
