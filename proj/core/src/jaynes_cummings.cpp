#include "noonsim/jaynes_cummings.hpp"

#include <cmath>
#include <stdexcept>

namespace noonsim {

namespace {

void validate(const JCParams& p) {
  if (p.n_max < 1) {
    throw std::invalid_argument("JCParams: n_max must be >= 1");
  }
}

// Down-sector member index i = 0..N-1 labels |down, i+2>.
int down_member_index(int member) { return 2 * member + 1; }

Eigen::MatrixXcd combine_members(const std::vector<MonitorWalk>& walks,
                                 const std::vector<double>& weights, int dim) {
  Eigen::MatrixXcd combined = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Eigen::VectorXcd& psi = walks[i].unnormalized_state().amps();
    combined.noalias() += weights[i] * (psi * psi.adjoint());
  }
  return combined;
}

}  // namespace

Hamiltonian build_jc_hamiltonian(const JCParams& p) {
  validate(p);
  const int dim = cavity_qubit_dim(p.n_max);
  Eigen::VectorXd diagonal(dim);
  Eigen::VectorXd subdiagonal = Eigen::VectorXd::Zero(dim - 1);
  for (int block = 1; block <= p.n_max; ++block) {
    const int i = 2 * (block - 1);
    diagonal(i) = 0.5 * block * p.omega;
    diagonal(i + 1) = 0.5 * (block + 1) * p.omega;
    subdiagonal(i) = 0.5 * p.coupling * std::sqrt(block + 1.0);
    // subdiagonal(i + 1) stays zero: blocks do not couple.
  }
  return Hamiltonian::from_tridiagonal(BasisFamily::cavity_qubit, diagonal,
                                       subdiagonal);
}

std::pair<CavityQubitLabel, CavityQubitLabel> jc_basis_of_block(const JCParams& p,
                                                                int block) {
  validate(p);
  if (block < 1 || block > p.n_max) {
    throw std::invalid_argument("jc_basis_of_block: block out of range");
  }
  return {CavityQubitLabel{Spin::up, block}, CavityQubitLabel{Spin::down, block + 1}};
}

JCEnsemble JCEnsemble::mixed(Eigen::VectorXd weights) {
  if (weights.size() < 1) {
    throw std::invalid_argument("JCEnsemble: empty weight vector");
  }
  if (weights.minCoeff() < 0.0) {
    throw std::invalid_argument("JCEnsemble: weights must be non-negative");
  }
  if (std::abs(weights.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("JCEnsemble: weights must sum to 1");
  }
  JCEnsemble ens;
  ens.pure_ = false;
  ens.n_max_ = static_cast<int>(weights.size());
  ens.weights_ = std::move(weights);
  return ens;
}

JCEnsemble JCEnsemble::pure(Eigen::VectorXcd coefficients) {
  if (coefficients.size() < 1) {
    throw std::invalid_argument("JCEnsemble: empty coefficient vector");
  }
  if (std::abs(coefficients.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("JCEnsemble: coefficients must have unit norm");
  }
  JCEnsemble ens;
  ens.pure_ = true;
  ens.n_max_ = static_cast<int>(coefficients.size());
  ens.coefficients_ = std::move(coefficients);
  return ens;
}

JCEnsemble JCEnsemble::uniform_mixed(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("JCEnsemble: n_max must be >= 1");
  }
  return mixed(Eigen::VectorXd::Constant(n_max, 1.0 / n_max));
}

const Eigen::VectorXd& JCEnsemble::weights() const {
  if (pure_) {
    throw std::invalid_argument("JCEnsemble: pure ensemble has no weights");
  }
  return weights_;
}

const Eigen::VectorXcd& JCEnsemble::coefficients() const {
  if (!pure_) {
    throw std::invalid_argument("JCEnsemble: mixed ensemble has no coefficients");
  }
  return coefficients_;
}

DensityMatrix JCEnsemble::initial_density(const JCParams& p) const {
  validate(p);
  if (n_max_ != p.n_max) {
    throw std::invalid_argument("JCEnsemble: size does not match n_max");
  }
  const int dim = cavity_qubit_dim(p.n_max);
  if (pure_) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    for (int i = 0; i < n_max_; ++i) {
      amps(down_member_index(i)) = coefficients_(i);
    }
    return DensityMatrix::pure(StateVector(BasisFamily::cavity_qubit, amps));
  }
  Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < n_max_; ++i) {
    entries(down_member_index(i), down_member_index(i)) = weights_(i);
  }
  return DensityMatrix(BasisFamily::cavity_qubit, entries);
}

StateVector JCEnsemble::default_reference(const JCParams& p) const {
  validate(p);
  if (n_max_ != p.n_max) {
    throw std::invalid_argument("JCEnsemble: size does not match n_max");
  }
  const int dim = cavity_qubit_dim(p.n_max);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  if (pure_) {
    for (int i = 0; i < n_max_; ++i) {
      amps(down_member_index(i)) = coefficients_(i);
    }
  } else {
    int support = 0;
    for (int i = 0; i < n_max_; ++i) {
      if (weights_(i) > 0.0) ++support;
    }
    if (support == 0) {
      throw std::invalid_argument("JCEnsemble: empty support");
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(support));
    for (int i = 0; i < n_max_; ++i) {
      if (weights_(i) > 0.0) amps(down_member_index(i)) = amp;
    }
  }
  return StateVector(BasisFamily::cavity_qubit, amps);
}

JCMonitoredWalk::JCMonitoredWalk(const JCParams& p, const JCEnsemble& ens,
                                 double tau, ProjectorMode mode)
    : JCMonitoredWalk(p, ens, tau, ens.default_reference(p), mode) {}

JCMonitoredWalk::JCMonitoredWalk(const JCParams& p, const JCEnsemble& ens,
                                 double tau, const StateVector& reference,
                                 ProjectorMode mode) {
  validate(p);
  const Hamiltonian h = build_jc_hamiltonian(p);
  const int dim = cavity_qubit_dim(p.n_max);

  auto member_state = [&](int i) {
    return StateVector::basis_state(BasisFamily::cavity_qubit, dim,
                                    down_member_index(i));
  };

  if (ens.is_pure()) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    for (int i = 0; i < ens.n_max(); ++i) {
      amps(down_member_index(i)) = ens.coefficients()(i);
    }
    const StateVector initial(BasisFamily::cavity_qubit, amps);
    const StateVector& ref =
        mode == ProjectorMode::per_member_reference ? initial : reference;
    walks_.emplace_back(MonitorProtocol{h, ref, tau, 1}, initial);
    member_weights_.push_back(1.0);
    return;
  }

  for (int i = 0; i < ens.n_max(); ++i) {
    if (ens.weights()(i) == 0.0) {
      continue;
    }
    const StateVector initial = member_state(i);
    const StateVector& ref =
        mode == ProjectorMode::per_member_reference ? initial : reference;
    walks_.emplace_back(MonitorProtocol{h, ref, tau, 1}, initial);
    member_weights_.push_back(ens.weights()(i));
  }
}

void JCMonitoredWalk::advance() {
  for (MonitorWalk& walk : walks_) {
    walk.advance();
  }
  ++step_;
}

double JCMonitoredWalk::trace() const {
  double total = 0.0;
  for (std::size_t i = 0; i < walks_.size(); ++i) {
    total += member_weights_[i] * walks_[i].survival_norm();
  }
  return total;
}

DensityMatrix JCMonitoredWalk::normalized_density(const JCParams& p) const {
  const double tr = trace();
  if (tr < kExtinctionThreshold) {
    throw extinction_error(step_, tr);
  }
  const int dim = cavity_qubit_dim(p.n_max);
  return DensityMatrix(BasisFamily::cavity_qubit,
                       combine_members(walks_, member_weights_, dim) / tr);
}

Eigen::MatrixXcd JCMonitoredWalk::reduced_photon_matrix(const JCParams& p) const {
  return reduce_over_qubit(normalized_density(p), p);
}

double JCMonitoredWalk::renyi2(const JCParams& p) const {
  return -std::log2(reduced_photon_matrix(p).squaredNorm());
}

DensityMatrix jc_monitored_density(const JCParams& p, const JCEnsemble& ens,
                                   const MonitorProtocol& proto,
                                   ProjectorMode mode) {
  validate(p);
  if (proto.reference.dim() != cavity_qubit_dim(p.n_max) ||
      proto.reference.family() != BasisFamily::cavity_qubit) {
    throw std::invalid_argument("jc_monitored_density: reference is not in the 2N space");
  }
  JCMonitoredWalk walk(p, ens, proto.tau, proto.reference, mode);
  for (int m = 1; m <= proto.steps; ++m) {
    walk.advance();
  }
  return walk.normalized_density(p);
}

Eigen::MatrixXcd reduce_over_qubit(const DensityMatrix& rho, const JCParams& p) {
  validate(p);
  if (rho.family() != BasisFamily::cavity_qubit ||
      rho.dim() != cavity_qubit_dim(p.n_max)) {
    throw std::invalid_argument("reduce_over_qubit: density is not a 2N cavity-qubit matrix");
  }
  const int n = p.n_max;
  Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  // Up sector: index 2(b-1) has photon number b; down sector: 2(b-1)+1 has b+1.
  for (int b = 1; b <= n; ++b) {
    for (int b2 = 1; b2 <= n; ++b2) {
      reduced(b - 1, b2 - 1) += rho.entries()(2 * (b - 1), 2 * (b2 - 1));
      reduced(b, b2) += rho.entries()(2 * (b - 1) + 1, 2 * (b2 - 1) + 1);
    }
  }
  return reduced;
}

std::vector<JCScanPoint> jc_entropy_scan(const JCParams& p, const JCEnsemble& ens,
                                         const std::vector<double>& ts) {
  validate(p);
  const Hamiltonian h = build_jc_hamiltonian(p);
  const DensityMatrix rho0 = ens.initial_density(p);

  std::vector<JCScanPoint> out;
  out.reserve(ts.size());
  for (double t : ts) {
    const DensityMatrix rho_t = evolve(h, rho0, t);
    const Eigen::MatrixXcd reduced = reduce_over_qubit(rho_t, p);
    JCScanPoint point;
    point.t_or_step = t;
    point.renyi2 = -std::log2(reduced.squaredNorm());
    point.trace_check = reduced.trace().real();
    out.push_back(point);
  }
  return out;
}

std::vector<JCScanPoint> jc_entropy_scan(const JCParams& p, const JCEnsemble& ens,
                                         double tau, int m_max,
                                         ProjectorMode mode) {
  if (m_max < 1) {
    throw std::invalid_argument("jc_entropy_scan: m_max must be >= 1");
  }
  JCMonitoredWalk walk(p, ens, tau, mode);
  std::vector<JCScanPoint> out;
  out.reserve(m_max);
  for (int m = 1; m <= m_max; ++m) {
    walk.advance();
    const Eigen::MatrixXcd reduced = walk.reduced_photon_matrix(p);
    JCScanPoint point;
    point.t_or_step = m;
    point.renyi2 = -std::log2(reduced.squaredNorm());
    point.trace_check = reduced.trace().real();
    out.push_back(point);
  }
  return out;
}

}  // namespace noonsim
