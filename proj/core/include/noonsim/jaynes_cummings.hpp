#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "noonsim/basis.hpp"
#include "noonsim/density.hpp"
#include "noonsim/hamiltonian.hpp"
#include "noonsim/monitor.hpp"
#include "noonsim/state.hpp"

namespace noonsim {

struct JCParams {
  int n_max = 15;        // N, number of 2x2 blocks; Hilbert dimension 2N
  double omega = 1.0;    // cavity frequency
  double omega_a = 1.0;  // qubit frequency; recorded in metadata only, the
                         // block matrices do not contain it
  double coupling = 0.1; // Omega
};

// Block-diagonal 2N x 2N matrix; block n is
//   (1/2) [[ n*omega,            Omega*sqrt(n+1) ],
//          [ Omega*sqrt(n+1),    (n+1)*omega     ]]
// coupling |up,n> with |down,n+1>.
Hamiltonian build_jc_hamiltonian(const JCParams& p);

// The two labels block n couples: (|up,n>, |down,n+1>). For n = N the
// second label carries the boundary photon number N+1.
std::pair<CavityQubitLabel, CavityQubitLabel> jc_basis_of_block(const JCParams& p,
                                                                int block);

// Initial preparation in the down sector: either a diagonal mixture with
// weights over the N down basis states |down,n0>, n0 = 2..N+1, or a pure
// superposition with complex coefficients over the same states.
class JCEnsemble {
 public:
  static JCEnsemble mixed(Eigen::VectorXd weights);      // size N, >= 0, sum 1
  static JCEnsemble pure(Eigen::VectorXcd coefficients); // size N, unit norm
  static JCEnsemble uniform_mixed(int n_max);

  bool is_pure() const { return pure_; }
  int n_max() const { return n_max_; }
  const Eigen::VectorXd& weights() const;
  const Eigen::VectorXcd& coefficients() const;

  DensityMatrix initial_density(const JCParams& p) const;

  // Reference state for the shared projector: the pure state itself, or the
  // uniform-amplitude superposition over the mixture's support.
  StateVector default_reference(const JCParams& p) const;

 private:
  JCEnsemble() = default;

  bool pure_ = false;
  int n_max_ = 0;
  Eigen::VectorXd weights_;
  Eigen::VectorXcd coefficients_;
};

// shared_reference applies one projector 1 - |psi_ref><psi_ref| to every
// ensemble member (the printed-formula reading). per_member_reference
// projects each member onto the complement of its own initial state; it is
// an alternative protocol, not the printed one.
enum class ProjectorMode { shared_reference, per_member_reference };

// Monitored ensemble walk: one state-vector walk per member, combined into
// the qubit-traced photon matrix with a single global normalization.
class JCMonitoredWalk {
 public:
  JCMonitoredWalk(const JCParams& p, const JCEnsemble& ens, double tau,
                  ProjectorMode mode = ProjectorMode::shared_reference);
  JCMonitoredWalk(const JCParams& p, const JCEnsemble& ens, double tau,
                  const StateVector& reference,
                  ProjectorMode mode = ProjectorMode::shared_reference);

  void advance();

  int step() const { return step_; }
  double trace() const;  // combined unnormalized trace

  DensityMatrix normalized_density(const JCParams& p) const;   // 2N x 2N
  Eigen::MatrixXcd reduced_photon_matrix(const JCParams& p) const;  // (N+1)^2
  double renyi2(const JCParams& p) const;

 private:
  std::vector<MonitorWalk> walks_;
  std::vector<double> member_weights_;
  int step_ = 0;
};

// Weighted sum of monitored member densities after proto.steps cycles,
// normalized by the global trace. proto.reference is the shared projector
// state; it is ignored under per_member_reference.
DensityMatrix jc_monitored_density(const JCParams& p, const JCEnsemble& ens,
                                   const MonitorProtocol& proto,
                                   ProjectorMode mode = ProjectorMode::shared_reference);

// Trace over the qubit: out(n-1, n'-1) = sum_sigma rho(sigma n, sigma n'),
// photon indices n = 1..N+1 (index N+1 exists only in the down sector).
Eigen::MatrixXcd reduce_over_qubit(const DensityMatrix& rho, const JCParams& p);

struct JCScanPoint {
  double t_or_step = 0.0;
  double renyi2 = 0.0;
  double trace_check = 0.0;  // trace of the reduced photon matrix
};

// Unitary mode: S2 of the qubit-traced matrix of e^{-iHt} rho0 e^{iHt}.
std::vector<JCScanPoint> jc_entropy_scan(const JCParams& p, const JCEnsemble& ens,
                                         const std::vector<double>& ts);

// Monitored mode, steps m = 1..m_max with the shared default reference.
std::vector<JCScanPoint> jc_entropy_scan(const JCParams& p, const JCEnsemble& ens,
                                         double tau, int m_max,
                                         ProjectorMode mode = ProjectorMode::shared_reference);

}  // namespace noonsim
