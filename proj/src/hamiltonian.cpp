#include "bipol/hamiltonian.hpp"

#include <numbers>
#include <sstream>

namespace bipol {

namespace {
constexpr double kPi = std::numbers::pi;

double photon_energy_idx(const ModelParams& p, int nu) {
  const double k = 2.0 * kPi * wrap_index(nu, p.n_sites) / (p.n_sites * p.lattice_const);
  return photon_energy(k, p);
}

double exciton_energy_idx(const ModelParams& p, int nu) {
  const double k = 2.0 * kPi * wrap_index(nu, p.n_sites) / (p.n_sites * p.lattice_const);
  return exciton_energy(k, p);
}
} // namespace

int blockade_mask(int n, const ModelParams& p) {
  return ring_distance(n, p.n_sites) <= p.ell() ? 1 : 0;
}

double potential(int n, const ModelParams& p) {
  if (p.potential_kind == PotentialKind::None || p.d_strength == 0.0) return 0.0;
  const int dist = ring_distance(n, p.n_sites);
  const int ref = 2 * p.blockade_cells + 1; // first allowed separation
  if (p.potential_kind == PotentialKind::NNA)
    return dist == ref ? p.d_strength : 0.0;
  // VdW; values inside the excluded window are irrelevant (C = 0 there)
  if (blockade_mask(n, p) || dist == 0) return 0.0;
  const double x = static_cast<double>(ref) / dist;
  const double x2 = x * x;
  return p.d_strength * x2 * x2 * x2;
}

double pair_kernel_pp(const ModelParams& p, int nu_total, int t2) {
  const int nu1 = (nu_total + t2) / 2, nu2 = (nu_total - t2) / 2;
  return photon_energy_idx(p, nu1) + photon_energy_idx(p, nu2);
}

double pair_kernel_pe(const ModelParams& p, int nu_total, int t2) {
  const int nu1 = (nu_total + t2) / 2, nu2 = (nu_total - t2) / 2;
  return photon_energy_idx(p, nu1) + exciton_energy_idx(p, nu2);
}

double pair_kernel_ee(const ModelParams& p, int nu_total, int t2) {
  const int nu1 = (nu_total + t2) / 2, nu2 = (nu_total - t2) / 2;
  return exciton_energy_idx(p, nu1) + exciton_energy_idx(p, nu2);
}

FixedKBasis make_fixed_k_basis(const ModelParams& p, int nu_total) {
  FixedKBasis b;
  b.n_sites = p.n_sites;
  b.nu_total = wrap_index(nu_total, p.n_sites);
  b.even_total = (b.nu_total % 2 == 0);
  b.constraint = p.constraint;

  const int n = p.n_sites;
  if (b.even_total) {
    for (int t2 = 0; t2 <= n; t2 += 2) b.kappa2.push_back(t2);
  } else {
    for (int t2 = 1; t2 <= n - 1; t2 += 2) b.kappa2.push_back(t2);
  }
  for (int t2 : b.kappa2)
    if (!b.self_paired(t2)) b.kappa2_ba.push_back(t2);

  if (p.constraint == ConstraintMode::Blockade) {
    const int r_max = b.even_total ? n / 2 : n / 2 - 1;
    for (int r = p.ell() + 1; r <= r_max; ++r) b.c_seps.push_back(r);
  }

  const int na = static_cast<int>(b.kappa2.size());
  const int nba = static_cast<int>(b.kappa2_ba.size());
  const int nc = p.constraint == ConstraintMode::Blockade
                     ? static_cast<int>(b.c_seps.size())
                     : na;
  b.a_off = 0;
  b.bs_off = na;
  b.ba_off = 2 * na;
  b.c_off = 2 * na + nba;
  b.dim = 2 * na + nba + nc;
  return b;
}

FixedKMatrix build_fixed_k(const ModelParams& p, int nu_total) {
  if (p.constraint == ConstraintMode::Off && p.potential_kind != PotentialKind::None &&
      p.d_strength != 0.0)
    throw config_error("constraint off requires d_strength = 0");

  FixedKMatrix m;
  m.basis = make_fixed_k_basis(p, nu_total);
  const FixedKBasis& b = m.basis;
  const int n = p.n_sites;
  const int nup = b.nu_total;
  const double root2 = std::sqrt(2.0);
  const double g = p.coupling_G;

  m.h = Eigen::MatrixXd::Zero(b.dim, b.dim);
  auto& h = m.h;

  // photon-photon and photon-exciton kinetic blocks plus the G sqrt(2) ladder
  std::vector<int> ba_pos(n + 1, -1);
  for (int j = 0; j < static_cast<int>(b.kappa2_ba.size()); ++j)
    ba_pos[b.kappa2_ba[j]] = j;

  for (int j = 0; j < static_cast<int>(b.kappa2.size()); ++j) {
    const int t2 = b.kappa2[j];
    const double e_pp = pair_kernel_pp(p, nup, t2);
    const double e_pe_plus = pair_kernel_pe(p, nup, t2);
    const double e_pe_minus = pair_kernel_pe(p, nup, -t2);
    h(b.a_off + j, b.a_off + j) = e_pp;
    h(b.bs_off + j, b.bs_off + j) = 0.5 * (e_pe_plus + e_pe_minus);
    h(b.a_off + j, b.bs_off + j) = root2 * g;
    h(b.bs_off + j, b.a_off + j) = root2 * g;
    if (ba_pos[t2] >= 0) {
      const int jb = b.ba_off + ba_pos[t2];
      h(jb, jb) = 0.5 * (e_pe_plus + e_pe_minus);
      h(b.bs_off + j, jb) = 0.5 * (e_pe_plus - e_pe_minus);
      h(jb, b.bs_off + j) = 0.5 * (e_pe_plus - e_pe_minus);
    }
  }

  if (p.constraint == ConstraintMode::Off) {
    // bosonic exciton pairs: the C sector mirrors the A sector
    for (int j = 0; j < static_cast<int>(b.kappa2.size()); ++j) {
      const int t2 = b.kappa2[j];
      h(b.c_off + j, b.c_off + j) = pair_kernel_ee(p, nup, t2);
      h(b.c_off + j, b.bs_off + j) = root2 * g;
      h(b.bs_off + j, b.c_off + j) = root2 * g;
    }
    return m;
  }

  // exciton-pair sector in separation space: deletion of blocked separations
  const int nc = static_cast<int>(b.c_seps.size());
  const double hop = 2.0 * p.hop_t * std::cos(kPi * nup / n); // 2 t cos(a K / 2)
  for (int i = 0; i < nc; ++i) {
    const int r = b.c_seps[i];
    h(b.c_off + i, b.c_off + i) = 2.0 * p.e0 + potential(r, p);
    if (i + 1 < nc) {
      const double edge = (b.c_seps[i + 1] == n / 2) ? root2 : 1.0;
      h(b.c_off + i, b.c_off + i + 1) = hop * edge;
      h(b.c_off + i + 1, b.c_off + i) = hop * edge;
    }
  }

  // G sqrt(2) coupling between B_S and the retained exciton separations
  for (int j = 0; j < static_cast<int>(b.kappa2.size()); ++j) {
    const int t2 = b.kappa2[j];
    const double w_k = b.self_paired(t2) ? 1.0 : root2;
    for (int i = 0; i < nc; ++i) {
      const int r = b.c_seps[i];
      const double w_r = (r == n / 2) ? 1.0 / root2 : 1.0;
      const double v =
          (2.0 * g / std::sqrt(static_cast<double>(n))) * std::cos(kPi * t2 * r / n) * w_k * w_r;
      h(b.bs_off + j, b.c_off + i) = v;
      h(b.c_off + i, b.bs_off + j) = v;
    }
  }
  return m;
}

RealSpaceMatrix build_real_space(const ModelParams& p) {
  if (p.n_sites > 16) throw config_error("build_real_space: N > 16 refused (oracle is dense)");
  const int n = p.n_sites;
  RealSpaceMatrix m;

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.a_pairs.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.b_pairs.emplace_back(i, j);
  const bool constrained = p.constraint == ConstraintMode::Blockade;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!constrained || !blockade_mask(i - j, p)) m.c_pairs.emplace_back(i, j);

  const int na = static_cast<int>(m.a_pairs.size());
  const int nb = static_cast<int>(m.b_pairs.size());
  const int nc = static_cast<int>(m.c_pairs.size());
  m.a_off = 0;
  m.b_off = na;
  m.c_off = na + nb;
  m.dim = na + nb + nc;
  m.h = Eigen::MatrixXd::Zero(m.dim, m.dim);
  auto& h = m.h;

  // real-space photon hopping kernel (1/N) sum_q E_p(q) e^{i q r}
  std::vector<double> ep_kernel(n, 0.0);
  for (int r = 0; r < n; ++r) {
    double acc = 0.0;
    for (int nu = -n / 2 + 1; nu <= n / 2; ++nu)
      acc += photon_energy_idx(p, nu) * std::cos(2.0 * kPi * nu * r / n);
    ep_kernel[r] = acc / n;
  }
  auto hp = [&](int x, int y) { return ep_kernel[((x - y) % n + n) % n]; };
  auto ring_adjacent = [&](int x, int y) { return ring_distance(x - y, n) == 1; };
  auto he = [&](int x, int y) {
    if (x == y) return p.e0;
    return ring_adjacent(x, y) ? p.hop_t : 0.0;
  };
  const double g = p.coupling_G;

  // photon-photon block: symmetric two-boson matrix elements
  for (int c = 0; c < na; ++c) {
    const auto [cn, cm] = m.a_pairs[c];
    const double norm_c = cn == cm ? std::sqrt(2.0) : 1.0;
    for (int r = c; r < na; ++r) {
      const auto [rp, rq] = m.a_pairs[r];
      const double norm_r = rp == rq ? std::sqrt(2.0) : 1.0;
      double v = 0.0;
      if (rq == cm) v += hp(rp, cn);
      if (rq == cn) v += hp(rp, cm);
      if (rp == cm) v += hp(rq, cn);
      if (rp == cn) v += hp(rq, cm);
      v /= norm_c * norm_r;
      h(m.a_off + r, m.a_off + c) = v;
      h(m.a_off + c, m.a_off + r) = v;
    }
  }

  // photon-exciton block
  for (int c = 0; c < nb; ++c) {
    const auto [cn, cm] = m.b_pairs[c];
    for (int r = c; r < nb; ++r) {
      const auto [rn, rm] = m.b_pairs[r];
      double v = 0.0;
      if (rm == cm) v += hp(rn, cn);
      if (rn == cn) v += he(rm, cm);
      h(m.b_off + r, m.b_off + c) = v;
      h(m.b_off + c, m.b_off + r) = v;
    }
  }

  // exciton-pair block: hard-core hopping and the dynamical interaction
  auto c_index = [&](int x, int y) -> int {
    if (x == y) return -1;
    if (x > y) std::swap(x, y);
    for (int i = 0; i < nc; ++i)
      if (m.c_pairs[i].first == x && m.c_pairs[i].second == y) return i;
    return -1;
  };
  for (int c = 0; c < nc; ++c) {
    const auto [x, y] = m.c_pairs[c];
    h(m.c_off + c, m.c_off + c) = 2.0 * p.e0 + potential(x - y, p);
    for (int site : {0, 1})
      for (int step : {+1, -1}) {
        int nx = x, ny = y;
        (site == 0 ? nx : ny) = (((site == 0 ? x : y) + step) % n + n) % n;
        const int t = c_index(nx, ny);
        if (t >= 0) h(m.c_off + c, m.c_off + t) += p.hop_t;
      }
  }

  // light-matter terms
  for (int c = 0; c < na; ++c) {
    const auto [cn, cm] = m.a_pairs[c];
    const double norm_c = cn == cm ? std::sqrt(2.0) : 1.0;
    for (int r = 0; r < nb; ++r) {
      const auto [rn, rm] = m.b_pairs[r]; // photon rn, exciton rm
      double v = 0.0;
      if (rn == cm && rm == cn) v += g;
      if (rn == cn && rm == cm) v += g;
      v /= norm_c;
      if (v != 0.0) {
        h(m.b_off + r, m.a_off + c) = v;
        h(m.a_off + c, m.b_off + r) = v;
      }
    }
  }
  for (int r = 0; r < nb; ++r) {
    const auto [rn, rm] = m.b_pairs[r];
    const int t = c_index(rn, rm);
    if (t >= 0) {
      h(m.c_off + t, m.b_off + r) += g;
      h(m.b_off + r, m.c_off + t) += g;
    }
  }
  return m;
}

EigenSystem eigensolve(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolve failed: dim=" << h.rows() << " norm=" << h.norm()
        << " sym_residual=" << (h - h.transpose()).cwiseAbs().maxCoeff();
    throw numeric_error(msg.str());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

TwoExcitationState extract_state(const Eigen::VectorXd& v, double energy,
                                 const FixedKBasis& b, const ModelParams& p) {
  const int n = p.n_sites;
  const double root2 = std::sqrt(2.0);
  TwoExcitationState st;
  st.energy = energy;

  std::vector<int> pos(n + 1, -1);
  for (int j = 0; j < static_cast<int>(b.kappa2.size()); ++j) pos[b.kappa2[j]] = j;
  std::vector<int> ba_pos(n + 1, -1);
  for (int j = 0; j < static_cast<int>(b.kappa2_ba.size()); ++j) ba_pos[b.kappa2_ba[j]] = j;

  st.a_k.setZero(n);
  st.b_k.setZero(n);
  st.c_k.setZero(n);
  st.rel_kappa.resize(n);
  Eigen::VectorXcd bs_k = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd ba_k = Eigen::VectorXcd::Zero(n);

  for (int i = 0; i < n; ++i) {
    const int t2 = b.t2_full(i);
    st.rel_kappa[i] = 0.5 * t2;
    const int t2abs = std::abs(t2);
    const int j = pos[t2abs];
    const double share = b.self_paired(t2abs) ? 1.0 : 1.0 / root2;
    st.a_k[i] = v[b.a_off + j] * share;
    bs_k[i] = v[b.bs_off + j] * share;
    if (ba_pos[t2abs] >= 0)
      ba_k[i] = v[b.ba_off + ba_pos[t2abs]] * (t2 > 0 ? 1.0 : -1.0) / root2;
    if (b.constraint == ConstraintMode::Off) st.c_k[i] = v[b.c_off + j] * share;
  }
  st.b_k = bs_k + ba_k;

  st.a_n.setZero(n);
  st.bs_n.setZero(n);
  st.ba_n.setZero(n);
  st.c_n.setZero(n);

  if (b.constraint == ConstraintMode::Blockade) {
    std::vector<int> c_pos(n / 2 + 1, -1);
    for (int i = 0; i < static_cast<int>(b.c_seps.size()); ++i) c_pos[b.c_seps[i]] = i;
    for (int sep = sep_min(n); sep <= sep_max(n); ++sep) {
      const int r = ring_distance(sep, n);
      if (r <= n / 2 && c_pos[r] >= 0) {
        const double share = (r == n / 2) ? 1.0 : 1.0 / root2;
        st.c_n[sep_index(sep, n)] = v[b.c_off + c_pos[r]] * share;
      }
    }
    // wave-vector view of the exciton-pair amplitude
    for (int i = 0; i < n; ++i) {
      const int t2 = b.t2_full(i);
      std::complex<double> acc = 0.0;
      for (int sep = sep_min(n); sep <= sep_max(n); ++sep) {
        const double phase = -kPi * t2 * sep / n;
        acc += st.c_n[sep_index(sep, n)] *
               std::complex<double>(std::cos(phase), std::sin(phase));
      }
      st.c_k[i] = acc / std::sqrt(static_cast<double>(n));
    }
  }

  for (int sep = sep_min(n); sep <= sep_max(n); ++sep) {
    std::complex<double> acc_a = 0.0, acc_bs = 0.0, acc_ba = 0.0, acc_c = 0.0;
    for (int i = 0; i < n; ++i) {
      const double phase = kPi * b.t2_full(i) * sep / n;
      const std::complex<double> w(std::cos(phase), std::sin(phase));
      acc_a += st.a_k[i] * w;
      acc_bs += bs_k[i] * w;
      acc_ba += ba_k[i] * w;
      if (b.constraint == ConstraintMode::Off) acc_c += st.c_k[i] * w;
    }
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    const int si = sep_index(sep, n);
    st.a_n[si] = acc_a * inv;
    st.bs_n[si] = acc_bs * inv;
    st.ba_n[si] = acc_ba * inv;
    if (b.constraint == ConstraintMode::Off) st.c_n[si] = acc_c * inv;
  }

  st.w_aa = st.a_k.squaredNorm();
  st.w_ab = bs_k.squaredNorm() + ba_k.squaredNorm();
  st.w_cc = (b.constraint == ConstraintMode::Blockade) ? st.c_n.squaredNorm()
                                                       : st.c_k.squaredNorm();
  return st;
}

} // namespace bipol
