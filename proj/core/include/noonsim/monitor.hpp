#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "noonsim/cavities.hpp"
#include "noonsim/density.hpp"
#include "noonsim/hamiltonian.hpp"
#include "noonsim/state.hpp"

namespace noonsim {

// Repeated projection has driven the surviving trace below the extinction
// threshold; normalizing further would amplify numerical noise.
class extinction_error : public std::runtime_error {
 public:
  extinction_error(int step, double trace);
  int step() const noexcept { return step_; }
  double trace() const noexcept { return trace_; }

 private:
  int step_;
  double trace_;
};

inline constexpr double kExtinctionThreshold = 1e-300;

// One measurement cycle: unitary evolution over tau followed by projecting
// out the reference state. The first cycle of a walk is the unitary alone,
// so a walk of m steps realizes T_tau^{m-1} e^{-iH tau} with
// T_tau = e^{-iH tau} (1 - |psi0><psi0|).
struct MonitorProtocol {
  Hamiltonian hamiltonian;
  StateVector reference;  // psi0, normalized within 1e-12
  double tau = 0.0;       // > 0
  int steps = 1;          // m >= 1
};

// e^{-iH tau} (psi - <psi0|psi> psi0); output is unnormalized.
StateVector monitored_step(const StateVector& state, const MonitorProtocol& proto);

// Stepwise state-vector walk. Keeps the unnormalized state; survival_norm()
// is its squared norm (the probability that no measurement has detected the
// reference so far).
class MonitorWalk {
 public:
  MonitorWalk(MonitorProtocol proto, const StateVector& initial);

  void advance();

  int step() const { return step_; }
  double survival_norm() const { return survival_; }
  const MonitorProtocol& protocol() const { return proto_; }

  StateVector unnormalized_state() const;
  StateVector normalized_state() const;  // throws extinction_error

  // |<psi0|psi>| measured right after the most recent projection
  // (0 for the first, projection-free step).
  double post_projection_overlap() const { return post_projection_overlap_; }

 private:
  MonitorProtocol proto_;
  Eigen::MatrixXcd u_tau_;
  Eigen::VectorXcd psi_;
  double survival_ = 1.0;
  double post_projection_overlap_ = 0.0;
  int step_ = 0;
};

struct TrajectoryStep {
  int step = 0;              // m, 1-based
  double survival_norm = 0.0;
  StateVector unnormalized;
  StateVector normalized;
  double return_prob_unnorm = 0.0;  // |<psi0|unnormalized>|^2 (F_m for psi0)
  double return_prob_norm = 0.0;
  std::vector<double> f_m;             // |<target|unnormalized>|^2 per target
  std::vector<double> prob_normalized; // |<target|normalized>|^2 per target
  double renyi2 = 0.0;  // of the normalized state's basis diagonal
};

struct MonitorTrajectory {
  std::vector<TrajectoryStep> steps;
  double max_post_projection_overlap = 0.0;
};

// Runs proto.steps cycles from `initial`, recording F_m against each target
// from the unnormalized state (the monitored-transition probability) along
// with the normalized-state probabilities.
MonitorTrajectory run_trajectory(const MonitorProtocol& proto,
                                 const StateVector& initial,
                                 const std::vector<StateVector>& targets);

// Density-matrix walk, carried in the Hamiltonian eigenbasis so each cycle
// costs O(dim^2): the unitary is an elementwise phase twist and the
// projection a rank-one update.
class MonitoredDensityWalk {
 public:
  MonitoredDensityWalk(MonitorProtocol proto, const DensityMatrix& rho0);

  void advance();

  int step() const { return step_; }
  double trace() const;

  DensityMatrix unnormalized() const;
  DensityMatrix normalized() const;  // throws extinction_error

 private:
  MonitorProtocol proto_;
  Eigen::MatrixXcd rho_eig_;   // V^T rho V
  Eigen::VectorXcd phases_;    // e^{-i E tau}
  Eigen::VectorXcd ref_eig_;   // V^T psi0
  int step_ = 0;
};

// T_tau^{m-1} e^{-iH tau} rho0 e^{+iH tau} (T_tau^dag)^{m-1}, normalized by
// its trace. m = proto.steps.
DensityMatrix monitored_density(const MonitorProtocol& proto,
                                const DensityMatrix& rho0);

// Partial trace over the second cavity on the fixed-N sector: the diagonal
// of rho in the Fock basis, indexed by the left-cavity count n = 0..N.
Eigen::VectorXd reduce_two_cavity(const DensityMatrix& rho);

// S_alpha = log2(sum p^alpha) / (1 - alpha); probabilities must sum to 1
// within 1e-8. alpha defaults to 2; the alpha -> 1 limit is not provided.
double renyi_entropy(const Eigen::VectorXd& probs, double alpha = 2.0);
double renyi2_entropy(const Eigen::VectorXd& probs);
double renyi2_entropy(const DensityMatrix& rho);  // -log2 Tr[rho^2]

// S2 of the reduced diagonal of the unitarily evolved |N,0> at each grid time.
std::vector<std::pair<double, double>> entropy_scan_unitary(
    const CavityParams& p, const std::vector<double>& ts);

// S2 of the normalized monitored state per step, starting from the
// protocol's reference state.
std::vector<std::pair<int, double>> entropy_scan_monitored(
    const MonitorProtocol& proto, int m_max);

}  // namespace noonsim
