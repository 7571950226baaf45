#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "noonsim/cavities.hpp"
#include "noonsim/expm.hpp"

using namespace noonsim;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

CavityParams params_for(int n, double j = 1.0, double omega0 = 0.0) {
  CavityParams p;
  p.n_photons = n;
  p.coupling = j;
  p.omega0 = omega0;
  return p;
}

std::pair<Complex, Complex> numeric_amplitudes(const CavityParams& p, double t) {
  const Hamiltonian h = build_two_cavity_hamiltonian(p);
  const StateVector psi = evolve(h, two_cavity_fock(p.n_photons, p.n_photons), t);
  return {psi.amps()(0), psi.amps()(p.n_photons)};
}

double exact_choose(int n, int k) {
  double value = 1.0;
  for (int i = 1; i <= k; ++i) {
    value *= static_cast<double>(n - k + i) / i;
  }
  return value;
}

}  // namespace

TEST_CASE("hamiltonian matrix and spectrum for small N") {
  const Hamiltonian h1 = build_two_cavity_hamiltonian(params_for(1));
  Eigen::MatrixXd expected(2, 2);
  expected << 0.0, -0.5, -0.5, 0.0;
  CHECK((h1.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(h1.eigenvalues()(0) == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(h1.eigenvalues()(1) == doctest::Approx(0.5).epsilon(1e-10));

  const Hamiltonian h2 = build_two_cavity_hamiltonian(params_for(2));
  CHECK(h2.eigenvalues()(0) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(std::abs(h2.eigenvalues()(1)) < 1e-10);
  CHECK(h2.eigenvalues()(2) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(build_two_cavity_hamiltonian(params_for(0)), std::invalid_argument);
}

TEST_CASE("equidistant spectrum E_k = -J(N/2 - k) and trace identity") {
  for (int n : {3, 8, 15}) {
    const double j = 1.3;
    const Hamiltonian h = build_two_cavity_hamiltonian(params_for(n, j));
    for (int k = 0; k <= n; ++k) {
      CHECK(std::abs(h.eigenvalues()(k) - (-j * (0.5 * n - k))) < 1e-10);
    }
    CHECK(std::abs(h.eigenvalues().sum()) < 1e-9);

    const Hamiltonian ho = build_two_cavity_hamiltonian(params_for(n, j, 0.7));
    CHECK(ho.matrix().trace() == doctest::Approx(0.7 * n * (n + 1)).epsilon(1e-12));
  }
}

TEST_CASE("bare hopping convention keeps the unscaled matrix elements") {
  CavityParams p = params_for(1);
  p.hopping = HoppingConvention::bare_j;
  const Hamiltonian h = build_two_cavity_hamiltonian(p);
  Eigen::MatrixXd expected(2, 2);
  expected << 0.0, -1.0, -1.0, 0.0;
  CHECK((h.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(h.eigenvalues()(0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("hopping normalization fixed by the return amplitude at N=1,2,3") {
  // Brute-force check through the Taylor oracle, independent of evolve.
  for (int n : {1, 2, 3}) {
    const Hamiltonian h = build_two_cavity_hamiltonian(params_for(n));
    for (double t : {0.3, 1.1, 2.7}) {
      const Eigen::MatrixXcd u = expm_taylor_oracle(h, t);
      const Complex c0 = u(0, 0);
      CHECK(std::abs(c0 - Complex(std::pow(std::cos(0.5 * t), n), 0.0)) < 1e-8);
    }
  }
}

TEST_CASE("binomial overlap with the initial Fock state") {
  CHECK(overlap_initial_eigenstate(2, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(overlap_initial_eigenstate(2, 1) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(overlap_initial_eigenstate(2, 2) == doctest::Approx(0.5).epsilon(1e-12));

  for (int n : {5, 12}) {
    CHECK(overlap_initial_eigenstate(n, 0) ==
          doctest::Approx(std::pow(2.0, -0.5 * n)).epsilon(1e-12));
  }

  double sum_sq = 0.0;
  for (int k = 0; k <= 20; ++k) {
    sum_sq += std::pow(overlap_initial_eigenstate(20, k), 2);
  }
  CHECK(sum_sq == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(overlap_initial_eigenstate(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(overlap_initial_eigenstate(4, -1), std::invalid_argument);
}

TEST_CASE("spectral weights match the eigendecomposition") {
  for (int n : {4, 11, 30}) {
    const Hamiltonian h = build_two_cavity_hamiltonian(params_for(n));
    for (int k = 0; k <= n; ++k) {
      // Eigenvalues come back ascending, which is exactly the E_k order.
      const double numeric = std::abs(h.eigenvectors()(0, k));
      CHECK(std::abs(numeric - overlap_initial_eigenstate(n, k)) < 1e-9);
    }
  }
}

TEST_CASE("analytic amplitudes: endpoints and phases") {
  const auto [c0_start, cn_start] = analytic_amplitudes(params_for(7), 0.0);
  CHECK(c0_start == Complex(1.0, 0.0));
  CHECK(cn_start == Complex(0.0, 0.0));

  const auto [c0_pi, cn_pi] = analytic_amplitudes(params_for(2), kPi);
  CHECK(std::abs(c0_pi) < 1e-30);
  CHECK(std::abs(cn_pi - Complex(-1.0, 0.0)) < 1e-12);

  // Gaussian short-time decay for N = 100 at Jt well below 1/sqrt(N).
  const auto [c0_short, cn_short] = analytic_amplitudes(params_for(100), 0.02);
  const double gauss = std::exp(-100.0 * 0.02 * 0.02 / 8.0);
  CHECK(std::abs(std::abs(c0_short) - gauss) / gauss < 0.02);
}

TEST_CASE("numeric amplitudes agree with the closed forms") {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> tdist(0.0, 4.0 * kPi);
  for (int n : {1, 2, 10}) {
    const CavityParams p = params_for(n);
    for (int trial = 0; trial < 50; ++trial) {
      const double t = tdist(rng);
      const auto [c0, cn] = numeric_amplitudes(p, t);
      const auto [a0, an] = analytic_amplitudes(p, t);
      CHECK(std::abs(c0 - a0) < 1e-9);
      CHECK(std::abs(cn - an) < 1e-9);
    }
  }
}

TEST_CASE("noon measures at the initial state and algebraic identities") {
  const NoonReport start = noon_measures(Complex(1.0, 0.0), Complex(0.0, 0.0));
  CHECK(start.fidelity_phi0 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(start.fidelity_phipi == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(start.p_e == 0.0);
  CHECK(start.delta == 0.0);
  CHECK(start.phase_degenerate);
  CHECK(start.phase == 0.0);

  std::mt19937 rng(5);
  std::normal_distribution<double> dist(0.0, 0.4);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex c0(dist(rng), dist(rng));
    const Complex cn(dist(rng), dist(rng));
    const NoonReport r = noon_measures(c0, cn);
    CHECK(r.p_e == doctest::Approx(2.0 * std::abs(c0) * std::abs(cn)).epsilon(1e-12));
    CHECK(std::abs(r.delta - (r.fidelity_phi0 - r.fidelity_phipi)) < 1e-10);
    CHECK(std::abs(r.fidelity_phi0 - 0.5 * (expectation_a_sq(r) + r.delta)) < 1e-12);
    // Same numbers through the cosine form of the fidelity.
    CHECK(std::abs(noon_fidelity(c0, cn, 0.0) - r.fidelity_phi0) < 1e-12);
    CHECK(std::abs(noon_fidelity(c0, cn, kPi) - r.fidelity_phipi) < 1e-12);
    CHECK(husimi_q(r.fidelity_phi0) ==
          doctest::Approx(r.fidelity_phi0 / kPi).epsilon(1e-15));
  }
}

TEST_CASE("maximal creation probability P_e = 2^{1-N}") {
  CHECK(max_entanglement_probability(2) == 0.5);
  CHECK(max_entanglement_probability(10) == 0.001953125);
  // The numeric p_e at the closed-form extremum Jt = pi/2.
  for (int n : {2, 5, 10}) {
    const auto [c0, cn] = numeric_amplitudes(params_for(n), 0.5 * kPi);
    CHECK(std::abs(2.0 * std::abs(c0 * cn) - max_entanglement_probability(n)) < 1e-12);
  }
}

TEST_CASE("delta tracks cos(N pi/2) p_e under unitary evolution") {
  // N = 10: cos(5 pi) = -1, so at Jt = pi/2 delta = -2^{-9}.
  const auto [c0, cn] = numeric_amplitudes(params_for(10), 0.5 * kPi);
  const NoonReport r = noon_measures(c0, cn);
  CHECK(r.delta == doctest::Approx(-0.001953125).epsilon(1e-9));

  for (int n : {2, 10, 20}) {
    const int sign = n % 4 == 0 ? 1 : -1;  // cos(N pi / 2) for even N
    const CavityParams p = params_for(n);
    for (double t : {0.4, 1.3, 2.9, 4.4}) {
      const auto [a0, an] = numeric_amplitudes(p, t);
      const NoonReport rr = noon_measures(a0, an);
      CHECK(std::abs(rr.delta - sign * rr.p_e) < 1e-10);
    }
  }
}

TEST_CASE("unitary scan: grid, periodicity and envelope") {
  const auto scan = unitary_scan(params_for(2), 2.0 * kPi, 0.01);
  CHECK(scan.size() == 629);

  double max_pe = 0.0;
  for (const NoonReport& r : scan) {
    CHECK(std::abs(r.p_e - 0.5 * std::pow(std::sin(r.t), 2)) < 1e-9);
    CHECK(r.abs_c0 * r.abs_c0 + r.abs_cN * r.abs_cN <= 1.0 + 1e-10);
    max_pe = std::max(max_pe, r.p_e);
  }
  CHECK(max_pe == doctest::Approx(0.5).epsilon(1e-4));

  // Reports one full period apart coincide.
  for (int n : {2, 7}) {
    const CavityParams p = params_for(n);
    for (double t : {0.3, 1.7}) {
      const auto [a0, an] = numeric_amplitudes(p, t);
      const auto [b0, bn] = numeric_amplitudes(p, t + 2.0 * kPi);
      const NoonReport ra = noon_measures(a0, an);
      const NoonReport rb = noon_measures(b0, bn);
      CHECK(std::abs(ra.abs_c0 - rb.abs_c0) < 1e-9);
      CHECK(std::abs(ra.abs_cN - rb.abs_cN) < 1e-9);
      CHECK(std::abs(ra.p_e - rb.p_e) < 1e-9);
      CHECK(std::abs(ra.delta - rb.delta) < 1e-9);
    }
  }

  double max_pe_20 = 0.0;
  for (const NoonReport& r : unitary_scan(params_for(20), 2.0 * kPi, 0.005)) {
    max_pe_20 = std::max(max_pe_20, r.p_e);
    CHECK(r.p_e <= max_entanglement_probability(20) + 1e-12);
  }
  CHECK(max_pe_20 == doctest::Approx(std::pow(2.0, -19)).epsilon(1e-4));
}

TEST_CASE("anti-correlation at Jt = pi") {
  for (int n : {2, 9, 20}) {
    const auto [c0, cn] = numeric_amplitudes(params_for(n), kPi);
    CHECK(std::abs(c0) < 1e-10);
    CHECK(std::abs(std::abs(cn) - 1.0) < 1e-10);
  }
}

TEST_CASE("moduli do not depend on omega0") {
  const auto base = unitary_scan(params_for(6), 3.0, 0.1);
  for (double omega0 : {1.0, 5.0}) {
    const auto shifted = unitary_scan(params_for(6, 1.0, omega0), 3.0, 0.1);
    REQUIRE(base.size() == shifted.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(std::abs(base[i].abs_c0 - shifted[i].abs_c0) < 1e-10);
      CHECK(std::abs(base[i].abs_cN - shifted[i].abs_cN) < 1e-10);
      CHECK(std::abs(base[i].p_e - shifted[i].p_e) < 1e-10);
      CHECK(std::abs(base[i].delta - shifted[i].delta) < 1e-10);
    }
  }
}

TEST_CASE("scan validation") {
  CHECK_THROWS_AS(unitary_scan(params_for(2), 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(unitary_scan(params_for(2), 0.005, 0.01), std::invalid_argument);
}

TEST_CASE("amplitude visit histogram") {
  std::vector<NoonReport> constant(5, noon_measures(Complex(0.6, 0.0), Complex(0.3, 0.0)));
  const AmplitudeHistogram single = amplitude_visit_histogram(constant, 10);
  CHECK(single.density.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(single.density(6, 3) == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<NoonReport> two{noon_measures(Complex(0.1, 0.0), Complex(0.9, 0.0)),
                              noon_measures(Complex(0.9, 0.0), Complex(0.1, 0.0))};
  const AmplitudeHistogram pair = amplitude_visit_histogram(two, 4);
  CHECK(pair.density(0, 3) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pair.density(3, 0) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(amplitude_visit_histogram(two, 1), std::invalid_argument);
  CHECK_THROWS_AS(amplitude_visit_histogram({}, 4), std::invalid_argument);

  // Full-period N=2 scan lands on the analytic curve (cos^2, sin^2), so the
  // numeric histogram must match the brute-force binning of the closed form.
  const int bins = 16;
  const auto scan = unitary_scan(params_for(2), 2.0 * kPi, 0.001);
  const AmplitudeHistogram numeric = amplitude_visit_histogram(scan, bins);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(bins, bins);
  for (double t : time_grid(2.0 * kPi, 0.001)) {
    const double a0 = std::pow(std::cos(0.5 * t), 2);
    const double an = std::pow(std::sin(0.5 * t), 2);
    const auto bin = [&](double v) {
      return std::min(bins - 1, static_cast<int>(std::clamp(v, 0.0, 1.0) * bins));
    };
    expected(bin(a0), bin(an)) += 1.0;
  }
  expected /= expected.sum();
  CHECK((numeric.density - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("exact binomial helper agrees with the log-space overlap") {
  for (int k = 0; k <= 20; ++k) {
    const double direct = std::sqrt(exact_choose(20, k) * std::pow(2.0, -20));
    CHECK(overlap_initial_eigenstate(20, k) == doctest::Approx(direct).epsilon(1e-12));
  }
}
