#include "noonsim/monitor.hpp"

#include <cmath>
#include <string>

namespace noonsim {

namespace {

using Complex = std::complex<double>;

void validate(const MonitorProtocol& proto) {
  if (!(proto.tau > 0.0)) {
    throw std::invalid_argument("MonitorProtocol: tau must be positive");
  }
  if (proto.steps < 1) {
    throw std::invalid_argument("MonitorProtocol: steps must be >= 1");
  }
  if (proto.reference.dim() != proto.hamiltonian.dim() ||
      proto.reference.family() != proto.hamiltonian.family()) {
    throw std::invalid_argument("MonitorProtocol: reference/Hamiltonian mismatch");
  }
  if (!proto.reference.is_normalized(1e-12)) {
    throw std::invalid_argument("MonitorProtocol: reference state is not normalized");
  }
}

Eigen::VectorXcd phase_vector(const Eigen::VectorXd& energies, double tau) {
  const Complex minus_i(0.0, -1.0);
  return (minus_i * tau * energies.cast<Complex>().array()).exp();
}

double diagonal_renyi2(const Eigen::VectorXcd& amps) {
  const double sum = amps.array().abs2().square().sum();
  return -std::log2(sum);
}

}  // namespace

extinction_error::extinction_error(int step, double trace)
    : std::runtime_error("monitored state extinct at step " + std::to_string(step) +
                         " (trace " + std::to_string(trace) + ")"),
      step_(step),
      trace_(trace) {}

StateVector monitored_step(const StateVector& state, const MonitorProtocol& proto) {
  validate(proto);
  if (state.dim() != proto.hamiltonian.dim() ||
      state.family() != proto.hamiltonian.family()) {
    throw std::invalid_argument("monitored_step: dimension or basis mismatch");
  }
  const Complex overlap = inner(proto.reference, state);
  const StateVector projected(state.family(),
                              state.amps() - overlap * proto.reference.amps());
  return evolve(proto.hamiltonian, projected, proto.tau);
}

MonitorWalk::MonitorWalk(MonitorProtocol proto, const StateVector& initial)
    : proto_(std::move(proto)) {
  validate(proto_);
  if (initial.dim() != proto_.hamiltonian.dim() ||
      initial.family() != proto_.hamiltonian.family()) {
    throw std::invalid_argument("MonitorWalk: initial state mismatch");
  }
  u_tau_ = propagator(proto_.hamiltonian, proto_.tau);
  psi_ = initial.amps();
  survival_ = initial.norm_sq();
}

void MonitorWalk::advance() {
  if (step_ >= 1) {
    const Eigen::VectorXcd& ref = proto_.reference.amps();
    psi_ -= ref.dot(psi_) * ref;
    post_projection_overlap_ = std::abs(ref.dot(psi_));
  }
  psi_ = u_tau_ * psi_;
  survival_ = psi_.squaredNorm();
  ++step_;
}

StateVector MonitorWalk::unnormalized_state() const {
  return StateVector(proto_.reference.family(), psi_);
}

StateVector MonitorWalk::normalized_state() const {
  if (survival_ < kExtinctionThreshold) {
    throw extinction_error(step_, survival_);
  }
  return StateVector(proto_.reference.family(), psi_ / std::sqrt(survival_));
}

MonitorTrajectory run_trajectory(const MonitorProtocol& proto,
                                 const StateVector& initial,
                                 const std::vector<StateVector>& targets) {
  MonitorWalk walk(proto, initial);
  MonitorTrajectory trajectory;
  trajectory.steps.reserve(proto.steps);

  for (int m = 1; m <= proto.steps; ++m) {
    walk.advance();
    TrajectoryStep record{m, walk.survival_norm(), walk.unnormalized_state(),
                          walk.normalized_state()};
    record.return_prob_unnorm =
        std::norm(inner(proto.reference, record.unnormalized));
    record.return_prob_norm = std::norm(inner(proto.reference, record.normalized));
    record.f_m.reserve(targets.size());
    record.prob_normalized.reserve(targets.size());
    for (const StateVector& target : targets) {
      record.f_m.push_back(std::norm(inner(target, record.unnormalized)));
      record.prob_normalized.push_back(std::norm(inner(target, record.normalized)));
    }
    record.renyi2 = diagonal_renyi2(record.normalized.amps());

    trajectory.max_post_projection_overlap = std::max(
        trajectory.max_post_projection_overlap, walk.post_projection_overlap());
    trajectory.steps.push_back(std::move(record));
  }
  return trajectory;
}

MonitoredDensityWalk::MonitoredDensityWalk(MonitorProtocol proto,
                                           const DensityMatrix& rho0)
    : proto_(std::move(proto)) {
  validate(proto_);
  if (rho0.dim() != proto_.hamiltonian.dim() ||
      rho0.family() != proto_.hamiltonian.family()) {
    throw std::invalid_argument("MonitoredDensityWalk: density mismatch");
  }
  const Eigen::MatrixXd& v = proto_.hamiltonian.eigenvectors();
  rho_eig_ = v.transpose() * rho0.entries() * v;
  phases_ = phase_vector(proto_.hamiltonian.eigenvalues(), proto_.tau);
  ref_eig_ = v.transpose() * proto_.reference.amps();
}

void MonitoredDensityWalk::advance() {
  if (step_ >= 1) {
    // Pi rho Pi = rho - v r^dag - r v^dag + (v^dag r) v v^dag with r = rho v.
    const Eigen::VectorXcd r = rho_eig_ * ref_eig_;
    const Complex weight = ref_eig_.dot(r);
    rho_eig_.noalias() += weight * (ref_eig_ * ref_eig_.adjoint());
    rho_eig_.noalias() -= ref_eig_ * r.adjoint();
    rho_eig_.noalias() -= r * ref_eig_.adjoint();
  }
  rho_eig_ = phases_.asDiagonal() * rho_eig_ * phases_.conjugate().asDiagonal();
  rho_eig_ = 0.5 * (rho_eig_ + rho_eig_.adjoint().eval());
  ++step_;
}

double MonitoredDensityWalk::trace() const { return rho_eig_.trace().real(); }

DensityMatrix MonitoredDensityWalk::unnormalized() const {
  const Eigen::MatrixXd& v = proto_.hamiltonian.eigenvectors();
  return DensityMatrix(proto_.hamiltonian.family(),
                       v * rho_eig_ * v.transpose());
}

DensityMatrix MonitoredDensityWalk::normalized() const {
  const double tr = trace();
  if (tr < kExtinctionThreshold) {
    throw extinction_error(step_, tr);
  }
  const Eigen::MatrixXd& v = proto_.hamiltonian.eigenvectors();
  return DensityMatrix(proto_.hamiltonian.family(),
                       v * (rho_eig_ / tr) * v.transpose());
}

DensityMatrix monitored_density(const MonitorProtocol& proto,
                                const DensityMatrix& rho0) {
  if (std::abs(rho0.trace_real() - 1.0) > 1e-10) {
    throw std::invalid_argument("monitored_density: rho0 must be normalized");
  }
  MonitoredDensityWalk walk(proto, rho0);
  for (int m = 1; m <= proto.steps; ++m) {
    walk.advance();
  }
  return walk.normalized();
}

Eigen::VectorXd reduce_two_cavity(const DensityMatrix& rho) {
  if (rho.family() != BasisFamily::two_cavity) {
    throw std::invalid_argument("reduce_two_cavity: state is not in the two-cavity basis");
  }
  const int n = rho.dim() - 1;
  Eigen::VectorXd diag(n + 1);
  for (int left = 0; left <= n; ++left) {
    diag(left) = rho.entries()(n - left, n - left).real();
  }
  return diag;
}

double renyi_entropy(const Eigen::VectorXd& probs, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) {
    throw std::invalid_argument("renyi_entropy: alpha must be positive and != 1");
  }
  if (probs.minCoeff() < -1e-8) {
    throw std::invalid_argument("renyi_entropy: negative probability");
  }
  if (std::abs(probs.sum() - 1.0) > 1e-8) {
    throw std::invalid_argument("renyi_entropy: probabilities do not sum to 1");
  }
  const double sum = probs.array().max(0.0).pow(alpha).sum();
  return std::log2(sum) / (1.0 - alpha);
}

double renyi2_entropy(const Eigen::VectorXd& probs) {
  return renyi_entropy(probs, 2.0);
}

double renyi2_entropy(const DensityMatrix& rho) {
  if (std::abs(rho.trace_real() - 1.0) > 1e-8) {
    throw std::invalid_argument("renyi2_entropy: density matrix is not normalized");
  }
  return -std::log2(purity(rho));
}

std::vector<std::pair<double, double>> entropy_scan_unitary(
    const CavityParams& p, const std::vector<double>& ts) {
  const Hamiltonian h = build_two_cavity_hamiltonian(p);
  const StateVector initial = two_cavity_fock(p.n_photons, p.n_photons);

  std::vector<std::pair<double, double>> out;
  out.reserve(ts.size());
  for (double t : ts) {
    const StateVector psi = evolve(h, initial, t);
    out.emplace_back(t, diagonal_renyi2(psi.amps()));
  }
  return out;
}

std::vector<std::pair<int, double>> entropy_scan_monitored(
    const MonitorProtocol& proto, int m_max) {
  if (m_max < 1) {
    throw std::invalid_argument("entropy_scan_monitored: m_max must be >= 1");
  }
  MonitorWalk walk(proto, proto.reference);
  std::vector<std::pair<int, double>> out;
  out.reserve(m_max);
  for (int m = 1; m <= m_max; ++m) {
    walk.advance();
    out.emplace_back(m, diagonal_renyi2(walk.normalized_state().amps()));
  }
  return out;
}

}  // namespace noonsim
