#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bipol/model.hpp"

using namespace bipol;

namespace {
constexpr double kPi = std::numbers::pi;

ModelParams defaults() { return derive_params(ModelParams{}); }
} // namespace

TEST_CASE("derive_params fills derived fields and validates invariants") {
  auto p = defaults();
  // q_perp = (e0 + delta)/c_hbar with c_hbar = 4 sqrt(e0 G)/pi = 40.2642...
  CHECK(p.c_hbar == doctest::Approx(40.263369683590).epsilon(1e-9));
  CHECK(p.q_perp == doctest::Approx((1000.0 + 0.1) / p.c_hbar).epsilon(1e-14));
  CHECK(p.q_perp == doctest::Approx(24.8384).epsilon(1e-4));
  CHECK(p.g_single == doctest::Approx(1.0 / std::sqrt(100.0)));

  ModelParams odd;
  odd.n_sites = 7;
  CHECK_THROWS_AS(derive_params(odd), config_error);

  ModelParams crowded;
  crowded.n_sites = 100;
  crowded.blockade_cells = 49;
  CHECK_THROWS_AS(derive_params(crowded), config_error);

  ModelParams fast_hopping;
  fast_hopping.hop_t = 0.5;
  std::vector<std::string> warnings;
  derive_params(fast_hopping, &warnings);
  REQUIRE(warnings.size() == 1);
}

TEST_CASE("photon dispersion") {
  auto p = defaults();
  CHECK(photon_energy(0.0, p) == doctest::Approx(p.e0 + p.detuning).epsilon(1e-14));
  // at the zone edge: sqrt((c hbar pi)^2 + (e0+delta)^2) ~ 1008 G
  const double edge = std::sqrt(std::pow(p.c_hbar * kPi, 2) + std::pow(p.e0 + p.detuning, 2));
  CHECK(photon_energy(kPi, p) == doctest::Approx(edge).epsilon(1e-14));
  CHECK(edge == doctest::Approx(1008.05).epsilon(1e-3));
  // even in k on the grid
  for (int nu = 1; nu < p.n_sites / 2; ++nu) {
    const double k = 2.0 * kPi * nu / p.n_sites;
    CHECK(photon_energy(k, p) == doctest::Approx(photon_energy(-k, p)).epsilon(1e-15));
  }
  // periodic through the BZ wrap
  CHECK(photon_energy(kPi + 0.3, p) == doctest::Approx(photon_energy(-kPi + 0.3, p)).epsilon(1e-13));
}

TEST_CASE("exciton dispersion") {
  auto p = defaults();
  CHECK(exciton_energy(0.0, p) == doctest::Approx(p.e0 + 2.0 * p.hop_t));
  CHECK(exciton_energy(kPi / 2.0, p) == doctest::Approx(p.e0).epsilon(1e-12));
  auto flat = p;
  flat.hop_t = 0.0;
  for (double k : {0.1, 1.0, 2.5}) CHECK(exciton_energy(k, flat) == doctest::Approx(p.e0));
}

TEST_CASE("polariton branches") {
  auto p = defaults();
  // resonance: splitting exactly 2G
  auto res = p;
  res.detuning = 2.0 * res.hop_t; // E_p(0) == E_e(0) = e0 + 2t
  res = derive_params(res);
  const auto b0 = polariton_branches(0.0, res);
  CHECK(b0.upper - b0.lower == doctest::Approx(2.0 * res.coupling_G).epsilon(1e-12));

  // G -> 0: branches approach the bare energies
  auto weak = p;
  weak.coupling_G = 1e-8;
  weak.c_hbar = p.c_hbar; // keep the dispersion fixed
  weak = derive_params(weak);
  const double k = 2.0 * kPi * 7 / p.n_sites;
  const auto bw = polariton_branches(k, weak);
  CHECK(bw.lower == doctest::Approx(std::min(photon_energy(k, weak), exciton_energy(k, weak)))
                        .epsilon(1e-9));
  CHECK(bw.upper == doctest::Approx(std::max(photon_energy(k, weak), exciton_energy(k, weak)))
                        .epsilon(1e-9));

  // defaults at k=0: frozen from the closed form
  const auto b = polariton_branches(0.0, p);
  const double avg = 0.5 * (1000.02 + 1000.1);
  const double split = std::sqrt(0.08 * 0.08 + 4.0);
  CHECK(b.lower == doctest::Approx(avg - 0.5 * split).epsilon(1e-12));
  CHECK(b.upper == doctest::Approx(avg + 0.5 * split).epsilon(1e-12));

  // trace identity and strict ordering across the grid
  for (int nu = -p.n_sites / 2 + 1; nu <= p.n_sites / 2; ++nu) {
    const double kk = 2.0 * kPi * nu / p.n_sites;
    const auto bb = polariton_branches(kk, p);
    const double trace = exciton_energy(kk, p) + photon_energy(kk, p);
    CHECK(bb.lower + bb.upper == doctest::Approx(trace).epsilon(1e-12));
    CHECK(bb.lower < bb.upper);
  }
}

TEST_CASE("pair energies") {
  auto p = defaults();
  const double K = 2.0 * kPi * 8 / p.n_sites;
  // symmetry under relabeling
  for (int nu : {0, 3, 17, 49}) {
    const double k = 2.0 * kPi * nu / p.n_sites;
    CHECK(pair_energy(Branch::Lower, Branch::Upper, K, k, p) ==
          doctest::Approx(pair_energy(Branch::Upper, Branch::Lower, K, -k, p)).epsilon(1e-14));
  }
  // K=0 reduces to E_i(k) + E_j(k)
  for (int nu : {1, 12, 30}) {
    const double k = 2.0 * kPi * nu / p.n_sites;
    const auto b = polariton_branches(k, p);
    CHECK(pair_energy(Branch::Lower, Branch::Lower, 0.0, k, p) ==
          doctest::Approx(2.0 * b.lower).epsilon(1e-14));
  }
  // LL minimum sits at k = +-K/2 for small K once the strong-coupling dip is
  // narrower than the grid spacing (one constituent parks at the dip)
  ModelParams narrow;
  narrow.e0 = 1.0e4;
  narrow.c_hbar = 2.0e6; // a k_SC = 1e-4
  narrow = derive_params(narrow);
  for (int nup : {2, 4, 6}) {
    const double Ks = 2.0 * kPi * nup / narrow.n_sites;
    double best_k = 0.0, best_e = 1e300;
    for (int nu = -narrow.n_sites / 2 + 1; nu <= narrow.n_sites / 2; ++nu) {
      const double k = 2.0 * kPi * nu / narrow.n_sites;
      const double e = pair_energy(Branch::Lower, Branch::Lower, Ks, k, narrow);
      if (e < best_e) {
        best_e = e;
        best_k = k;
      }
    }
    CHECK(std::abs(std::abs(best_k) - 0.5 * Ks) < 1e-12);
  }
}

TEST_CASE("strong coupling edge") {
  auto p = defaults();
  CHECK(strong_coupling_edge(p) * p.lattice_const == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  auto doubled = p;
  doubled.coupling_G = 2.0;
  doubled.c_hbar = p.c_hbar;
  doubled = derive_params(doubled);
  CHECK(strong_coupling_edge(doubled) ==
        doctest::Approx(std::sqrt(2.0) * strong_coupling_edge(p)).epsilon(1e-12));

  // solid-like parameters push the edge to a k_SC ~ 1e-4
  ModelParams solid;
  solid.e0 = 1.0e4;
  solid.c_hbar = 2.0e6;
  solid = derive_params(solid);
  CHECK(strong_coupling_edge(solid) * solid.lattice_const == doctest::Approx(1e-4).epsilon(1e-12));
}

TEST_CASE("grid closure under BZ wrap") {
  auto p = defaults();
  const int n = p.n_sites;
  for (int nup : {0, 1, 5, n / 2}) {
    for (int j = 0; j < n; ++j) {
      const int t2 = (nup % 2 == 0) ? 2 * j - n + 2 : 2 * j - n + 1;
      const double K = 2.0 * kPi * nup / n;
      const double k = kPi * t2 / n;
      for (double q : {0.5 * K + k, 0.5 * K - k}) {
        const double w = wrap_to_bz(q, 1.0) * n / (2.0 * kPi);
        CHECK(std::abs(w - std::lround(w)) < 1e-9);
        CHECK(w > -n / 2.0 - 1e-9);
        CHECK(w < n / 2.0 + 1e-9);
      }
    }
  }
}
