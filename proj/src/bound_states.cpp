#include "bipol/bound_states.hpp"

#include <cmath>
#include <numbers>

#include "bipol/virtual_basis.hpp"

namespace bipol {

namespace {
constexpr double kPi = std::numbers::pi;

// E - E_ee(k) - 2G^2/W(E,k): zero exactly when E solves the one-k 4x4 block.
struct ChannelWeight {
  double m = 0.0;       // E - E_ee - stuff
  double stuff = 0.0;   // eliminated photon-channel weight
  bool pole = false;
};

ChannelWeight channel_weight(double energy, const ModelParams& p, int nu_total, int t2) {
  ChannelWeight out;
  const double e_pp = pair_kernel_pp(p, nu_total, t2);
  const double e_pe_p = pair_kernel_pe(p, nu_total, t2);
  const double e_pe_m = pair_kernel_pe(p, nu_total, -t2);
  const double avg = 0.5 * (e_pe_p + e_pe_m);
  const double half = 0.5 * (e_pe_p - e_pe_m);
  const double g2 = p.coupling_G * p.coupling_G;
  const double scale = p.coupling_G;

  const double d_pp = energy - e_pp;
  const double d_pe = energy - avg;
  if (std::abs(d_pp) < 1e-12 * scale || std::abs(d_pe) < 1e-12 * scale) {
    out.pole = true;
    return out;
  }
  double w = d_pe - 2.0 * g2 / d_pp;
  if (half != 0.0) w -= half * half / d_pe;
  if (std::abs(w) < 1e-12 * scale) {
    out.pole = true;
    return out;
  }
  out.stuff = 2.0 * g2 / w;
  out.m = energy - pair_kernel_ee(p, nu_total, t2) - out.stuff;
  return out;
}

int snap_t2(double k, const ModelParams& p, int nu_total) {
  const double t = k * p.n_sites * p.lattice_const / kPi;
  const bool even = (wrap_index(nu_total, p.n_sites) % 2 == 0);
  long t2 = std::lround(t);
  if ((t2 % 2 == 0) != even) t2 += (t >= static_cast<double>(t2)) ? 1 : -1;
  return static_cast<int>(t2);
}
} // namespace

std::vector<double> biexciton_levels(const ModelParams& p) {
  std::vector<double> out;
  if (p.potential_kind == PotentialKind::None) return out;
  for (int r = 2 * p.blockade_cells + 1; r <= p.n_sites / 2; ++r) {
    const double d = potential(r, p);
    if (d != 0.0) out.push_back(2.0 * p.e0 + d);
  }
  return out;
}

PhiValue phi(double energy, int nu_total, double k, const ModelParams& p) {
  const int t2 = snap_t2(k, p, nu_total);
  const auto cw = channel_weight(energy, p, nu_total, t2);
  PhiValue out;
  out.pole = cw.pole;
  if (cw.pole) return out;
  const double denom = cw.m;
  if (std::abs(denom) < 1e-14 * p.coupling_G) {
    out.pole = true;
    return out;
  }
  out.phi = cw.stuff / denom;
  const double d_pp = energy - pair_kernel_pp(p, nu_total, t2);
  out.delta = out.phi != 0.0
                  ? 2.0 * p.coupling_G * p.coupling_G * d_pp / out.phi
                  : 0.0;
  return out;
}

DeterminantValue bipolariton_determinant(double energy, int nu_total, const ModelParams& p) {
  DeterminantValue out;
  if (p.potential_kind == PotentialKind::None)
    throw config_error("bipolariton_determinant requires a potential");
  const int n = p.n_sites;
  const int ell = p.ell();
  const int nup = wrap_index(nu_total, n);
  const bool even = (nup % 2 == 0);
  const int s0 = 2 * p.blockade_cells + 1;

  // diagonal resolvent over the full signed relative grid
  Eigen::VectorXd inv_m(n);
  std::vector<double> kk(n);
  for (int i = 0; i < n; ++i) {
    const int t2 = even ? 2 * i - n + 2 : 2 * i - n + 1;
    kk[i] = kPi * t2 / n; // a k
    const auto cw = channel_weight(energy, p, nup, t2);
    if (cw.pole || std::abs(cw.m) < 1e-13 * p.coupling_G) {
      out.pole = true;
      return out;
    }
    inv_m[i] = 1.0 / cw.m;
  }

  auto bracket = [&](bool symmetric) {
    // even channel: probe cos(s0 k), constraints cos(j k), j = 0..l
    // odd channel: probe sin(s0 k), constraints sin(j k), j = 1..l
    const int ncon = symmetric ? ell + 1 : ell;
    Eigen::VectorXd probe(n);
    Eigen::MatrixXd cons(n, ncon);
    for (int i = 0; i < n; ++i) {
      probe[i] = symmetric ? std::cos(s0 * kk[i]) : std::sin(s0 * kk[i]);
      for (int j = 0; j < ncon; ++j) {
        const int sep = symmetric ? j : j + 1;
        cons(i, j) = symmetric ? std::cos(sep * kk[i]) : std::sin(sep * kk[i]);
      }
    }
    double gamma = (probe.array().square() * inv_m.array()).sum();
    if (ncon > 0) {
      Eigen::MatrixXd s(ncon, ncon);
      Eigen::VectorXd q(ncon);
      for (int j = 0; j < ncon; ++j) {
        q[j] = (cons.col(j).array() * probe.array() * inv_m.array()).sum();
        for (int j2 = j; j2 < ncon; ++j2) {
          s(j, j2) = (cons.col(j).array() * cons.col(j2).array() * inv_m.array()).sum();
          s(j2, j) = s(j, j2);
        }
      }
      gamma -= q.dot(s.ldlt().solve(q));
    }
    return 1.0 - (2.0 * p.d_strength / n) * gamma;
  };

  out.symmetric = bracket(true);
  out.asymmetric = bracket(false);
  out.determinant = out.symmetric * out.asymmetric;
  return out;
}

BoundStateReport find_bipolariton(int nu_total, double window_lo, double window_hi,
                                  const ModelParams& p) {
  BoundStateReport report;
  report.nu_total = wrap_index(nu_total, p.n_sites);
  report.window_lo = window_lo;
  report.window_hi = window_hi;
  report.regime = std::abs(p.d_strength) > 1.5 * p.coupling_G ? "strong_D" : "weak_D";
  if (window_hi <= window_lo) return report;

  const int n_scan = 1000;
  const double step = (window_hi - window_lo) / n_scan;
  std::vector<double> roots;

  double prev_e = window_lo;
  auto prev = bipolariton_determinant(prev_e, nu_total, p);
  for (int i = 1; i <= n_scan; ++i) {
    const double e = window_lo + i * step;
    auto cur = bipolariton_determinant(e, nu_total, p);
    const bool clean = !prev.pole && !cur.pole && std::isfinite(prev.symmetric) &&
                       std::isfinite(cur.symmetric) && std::abs(prev.symmetric) < 1e8 &&
                       std::abs(cur.symmetric) < 1e8;
    if (clean && prev.symmetric * cur.symmetric < 0.0) {
      double lo = prev_e, hi = e, flo = prev.symmetric;
      while (hi - lo > 1e-10 * p.coupling_G) {
        const double mid = 0.5 * (lo + hi);
        const auto f = bipolariton_determinant(mid, nu_total, p);
        if (f.pole) break; // divergence inside; split off
        if (flo * f.symmetric <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = f.symmetric;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = cur;
    prev_e = e;
  }
  if (roots.empty()) return report;

  const auto spectrum = compute_spectrum(p, nu_total);
  for (const double root : roots) {
    BoundStateRoot entry;
    entry.root_energy = root;
    int best = 0;
    for (int i = 1; i < static_cast<int>(spectrum.states.size()); ++i)
      if (std::abs(spectrum.states[i].energy - root) <
          std::abs(spectrum.states[best].energy - root))
        best = i;
    const auto& st = spectrum.states[best];
    entry.matched_eigenvalue = st.energy;
    entry.match_residual = std::abs(st.energy - root);
    entry.state_index = best;
    entry.classification = root < spectrum.windows.ll_min ? "below_LL" : "in_gap";
    entry.delta_a = st.delta_a;
    entry.flag = st.flag;
    report.roots.push_back(entry);
  }
  return report;
}

std::vector<GapState> detect_gap_states(const SpectrumResult& spectrum) {
  std::vector<GapState> out;
  const auto& w = spectrum.windows;
  if (w.lu_min <= w.ll_max) return out; // no gap
  const double tol = 1e-9 * spectrum.params.coupling_G;
  // lower gap edge: interactions push the LL ladder down, so a state split off
  // the band can still sit a hair inside the noninteracting window
  double gap_lo = w.ll_max;
  const auto ladder = ll_ladder(spectrum);
  if (!ladder.empty())
    gap_lo = std::min(gap_lo, spectrum.states[ladder.back()].energy);
  for (int i = 0; i < static_cast<int>(spectrum.states.size()); ++i) {
    if (!ladder.empty() && i <= ladder.back()) continue; // inside the band
    const auto& st = spectrum.states[i];
    if (st.energy > gap_lo + tol && st.energy < w.lu_min - tol) {
      GapState g;
      g.state_index = i;
      g.energy = st.energy;
      g.delta_a = st.delta_a;
      g.flag = st.flag;
      g.kinematic = (spectrum.params.potential_kind == PotentialKind::None ||
                     spectrum.params.d_strength == 0.0);
      g.gap_lo = w.ll_max;
      g.gap_hi = w.lu_min;
      out.push_back(g);
    }
  }
  return out;
}

} // namespace bipol
