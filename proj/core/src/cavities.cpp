#include "noonsim/cavities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace noonsim {

namespace {

using Complex = std::complex<double>;

void validate(const CavityParams& p) {
  if (p.n_photons < 1) {
    throw std::invalid_argument("CavityParams: n_photons must be >= 1");
  }
  if (!(p.coupling > 0.0)) {
    throw std::invalid_argument("CavityParams: coupling must be positive");
  }
}

// (-i)^n, exact.
Complex minus_i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

double wrap_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  while (phi > std::numbers::pi) phi -= two_pi;
  while (phi <= -std::numbers::pi) phi += two_pi;
  return phi;
}

int histogram_bin(double value, int bins) {
  const double clamped = std::clamp(value, 0.0, 1.0);
  return std::min(bins - 1, static_cast<int>(clamped * bins));
}

}  // namespace

Hamiltonian build_two_cavity_hamiltonian(const CavityParams& p) {
  validate(p);
  const int n = p.n_photons;
  // half_j: +J/2 off-diagonals, the sign-gauge under which the evolved
  // amplitudes carry the (-i)^N transition phase of the closed forms.
  // bare_j: the literal -J second-quantized matrix elements.
  const double scale =
      p.hopping == HoppingConvention::half_j ? 0.5 * p.coupling : -p.coupling;

  Eigen::VectorXd diagonal = Eigen::VectorXd::Constant(n + 1, p.omega0 * n);
  Eigen::VectorXd subdiagonal(n);
  for (int k = 0; k < n; ++k) {
    subdiagonal(k) = scale * std::sqrt(static_cast<double>(k + 1) * (n - k));
  }
  return Hamiltonian::from_tridiagonal(BasisFamily::two_cavity, diagonal,
                                       subdiagonal);
}

StateVector two_cavity_fock(int n_photons, int left_count) {
  return StateVector::basis_state(BasisFamily::two_cavity,
                                  two_cavity_dim(n_photons),
                                  two_cavity_index(n_photons, left_count));
}

double overlap_initial_eigenstate(int n_photons, int k) {
  if (n_photons < 1) {
    throw std::invalid_argument("overlap_initial_eigenstate: n_photons must be >= 1");
  }
  if (k < 0 || k > n_photons) {
    throw std::invalid_argument("overlap_initial_eigenstate: k out of range");
  }
  const double log_choose = std::lgamma(n_photons + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n_photons - k + 1.0);
  return std::exp(0.5 * log_choose - 0.5 * n_photons * std::numbers::ln2);
}

std::pair<Complex, Complex> analytic_amplitudes(const CavityParams& p, double t) {
  validate(p);
  const double half = 0.5 * p.coupling * t;
  const double n = static_cast<double>(p.n_photons);
  const Complex c0 = std::pow(std::cos(half), n);
  const Complex cn = minus_i_pow(p.n_photons) * std::pow(std::sin(half), n);
  return {c0, cn};
}

NoonReport noon_measures(Complex c0, Complex cN, double t) {
  NoonReport r;
  r.t = t;
  r.abs_c0 = std::abs(c0);
  r.abs_cN = std::abs(cN);
  r.p_e = 2.0 * r.abs_c0 * r.abs_cN;
  r.phase_degenerate = r.abs_c0 * r.abs_cN < 1e-14;
  r.phase = r.phase_degenerate ? 0.0 : wrap_phase(std::arg(cN) - std::arg(c0));
  r.delta = 2.0 * std::real(std::conj(c0) * cN);
  const double a_sq = r.abs_c0 * r.abs_c0 + r.abs_cN * r.abs_cN;
  r.fidelity_phi0 = 0.5 * (a_sq + r.delta);
  r.fidelity_phipi = 0.5 * (a_sq - r.delta);
  return r;
}

double noon_fidelity(Complex c0, Complex cN, double theta) {
  const double a0 = std::abs(c0);
  const double aN = std::abs(cN);
  const double phi = a0 * aN < 1e-14 ? 0.0 : wrap_phase(std::arg(cN) - std::arg(c0));
  return 0.5 * (a0 * a0 + aN * aN + 2.0 * a0 * aN * std::cos(phi + theta));
}

double expectation_a_sq(const NoonReport& r) {
  return r.abs_c0 * r.abs_c0 + r.abs_cN * r.abs_cN;
}

double husimi_q(double fidelity) { return fidelity / std::numbers::pi; }

double max_entanglement_probability(int n_photons) {
  if (n_photons < 1) {
    throw std::invalid_argument("max_entanglement_probability: n_photons must be >= 1");
  }
  return std::ldexp(1.0, 1 - n_photons);
}

std::vector<double> time_grid(double t_max, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("time_grid: dt must be positive");
  }
  if (t_max < 0.0) {
    throw std::invalid_argument("time_grid: t_max must be non-negative");
  }
  const int count = static_cast<int>(std::floor(t_max / dt + 0.5)) + 1;
  std::vector<double> ts(count);
  for (int i = 0; i < count; ++i) {
    ts[i] = i * dt;
  }
  return ts;
}

std::vector<NoonReport> unitary_scan(const CavityParams& p, double t_max,
                                     double dt) {
  validate(p);
  if (!(dt > 0.0) || t_max < dt) {
    throw std::invalid_argument("unitary_scan: need dt > 0 and t_max >= dt");
  }

  const Hamiltonian h = build_two_cavity_hamiltonian(p);
  const StateVector initial = two_cavity_fock(p.n_photons, p.n_photons);
  const int last = p.n_photons;

  std::vector<NoonReport> reports;
  for (double t : time_grid(t_max, dt)) {
    const StateVector psi = evolve(h, initial, t);
    Complex c0 = psi.amps()(0);
    Complex cn = psi.amps()(last);
    if (p.omega0 != 0.0) {
      const Complex unwind =
          std::exp(Complex(0.0, p.omega0 * p.n_photons * t));
      c0 *= unwind;
      cn *= unwind;
    }
    reports.push_back(noon_measures(c0, cn, t));
  }
  return reports;
}

AmplitudeHistogram amplitude_visit_histogram(const std::vector<NoonReport>& scan,
                                             int bins) {
  if (bins < 2) {
    throw std::invalid_argument("amplitude_visit_histogram: bins must be >= 2");
  }
  if (scan.empty()) {
    throw std::invalid_argument("amplitude_visit_histogram: empty scan");
  }

  AmplitudeHistogram hist;
  hist.bins = bins;
  hist.density = Eigen::MatrixXd::Zero(bins, bins);
  for (const NoonReport& r : scan) {
    hist.density(histogram_bin(r.abs_c0, bins), histogram_bin(r.abs_cN, bins)) += 1.0;
  }
  hist.density /= static_cast<double>(scan.size());
  return hist;
}

}  // namespace noonsim
