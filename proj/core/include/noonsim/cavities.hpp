#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "noonsim/hamiltonian.hpp"
#include "noonsim/state.hpp"

namespace noonsim {

// Off-diagonal convention of the two-cavity hopping term. half_j (default)
// uses +J/2 sqrt((k+1)(N-k)), which carries the equidistant spectrum
// E_k = -J(N/2 - k) and makes the evolved amplitudes equal the closed forms
// cos^N(Jt/2) and (-i)^N sin^N(Jt/2) exactly, phase included. bare_j keeps
// the literal second-quantized elements -J sqrt((k+1)(N-k)) (level spacing
// 2J, transition phase (+i)^N) for sensitivity checks. The sign difference
// is a diagonal +-1 gauge; spectra and all moduli are unaffected by it.
enum class HoppingConvention { half_j, bare_j };

struct CavityParams {
  int n_photons = 1;   // N >= 1
  double coupling = 1.0;  // J > 0
  double omega0 = 0.0;    // single-mode frequency; a global phase on the sector
  HoppingConvention hopping = HoppingConvention::half_j;
};

// Per-time-point record of the N00N-state entanglement measures.
struct NoonReport {
  double t = 0.0;
  double abs_c0 = 0.0;
  double abs_cN = 0.0;
  double p_e = 0.0;            // 2 |c0 cN|
  double fidelity_phi0 = 0.0;  // target (|N,0> + |0,N>)/sqrt(2)
  double fidelity_phipi = 0.0; // target (|N,0> - |0,N>)/sqrt(2)
  double delta = 0.0;          // fidelity_phi0 - fidelity_phipi = 2 Re(c0* cN)
  double phase = 0.0;          // Phi = arg(cN) - arg(c0), in (-pi, pi]
  bool phase_degenerate = false;  // |c0 cN| < 1e-14; phase reported as 0
};

// (N+1) x (N+1) tridiagonal matrix in the basis |N-k, k>, k = 0..N, with
// constant diagonal omega0*N and the hopping off-diagonals chosen by
// p.hopping.
Hamiltonian build_two_cavity_hamiltonian(const CavityParams& p);

// |left, N-left> as a basis state of the fixed-N sector.
StateVector two_cavity_fock(int n_photons, int left_count);

// <N,0|E_k> = 2^{-N/2} C(N,k)^{1/2}; evaluated in log space so large N
// stays finite.
double overlap_initial_eigenstate(int n_photons, int k);

// Closed forms c0(t) = cos^N(Jt/2), cN(t) = (-i)^N sin^N(Jt/2), with the
// omega0 global phase left out. Oracle for the numerical evolution.
std::pair<std::complex<double>, std::complex<double>> analytic_amplitudes(
    const CavityParams& p, double t);

// All scalar measures derived from the pair (c0, cN).
NoonReport noon_measures(std::complex<double> c0, std::complex<double> cN,
                         double t = 0.0);

// Fidelity against the N00N target with total phase theta = phi*N:
// F = (|c0|^2 + |cN|^2 + 2|c0||cN| cos(Phi + theta)) / 2.
double noon_fidelity(std::complex<double> c0, std::complex<double> cN,
                     double theta);

// <A^2> = |c0|^2 + |cN|^2, the weight inside the {|N,0>,|0,N>} plane.
double expectation_a_sq(const NoonReport& r);

// Husimi-Q value at the N00N target, F/pi.
double husimi_q(double fidelity);

// Extremal creation probability P_e = 2^{-(N-1)}, attained at Jt = pi/2
// (mod pi), from the closed-form extremum of p_e(t) = |sin(Jt)|^N / 2^{N-1}.
double max_entanglement_probability(int n_photons);

// t = 0, dt, 2dt, ... < t_max + dt/2 (closed on the left, open on the right).
std::vector<double> time_grid(double t_max, double dt);

// Numeric (c0, cN) from `evolve` on that grid; the omega0 global phase is
// divided out so reports follow the analytic_amplitudes convention.
std::vector<NoonReport> unitary_scan(const CavityParams& p, double t_max,
                                     double dt);

// Normalized 2-D occupancy histogram of (|c0|, |cN|) on [0,1]^2.
struct AmplitudeHistogram {
  int bins = 0;
  Eigen::MatrixXd density;  // density(i,j): bin i of |c0|, bin j of |cN|
};
AmplitudeHistogram amplitude_visit_histogram(const std::vector<NoonReport>& scan,
                                             int bins);

}  // namespace noonsim
