#include "noonsim/hamiltonian.hpp"

#include <complex>
#include <stdexcept>

namespace noonsim {

namespace {

using Complex = std::complex<double>;

Eigen::VectorXcd phase_vector(const Eigen::VectorXd& energies, double t) {
  const Complex minus_i(0.0, -1.0);
  return (minus_i * t * energies.cast<Complex>().array()).exp();
}

}  // namespace

Hamiltonian::Hamiltonian(BasisFamily family, const Eigen::MatrixXd& entries) {
  if (entries.rows() < 1 || entries.rows() != entries.cols()) {
    throw std::invalid_argument("Hamiltonian: entries must be square and non-empty");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("Hamiltonian: entries must be symmetric");
  }
  family_ = family;
  entries_ = 0.5 * (entries + entries.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hamiltonian: eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Hamiltonian Hamiltonian::from_tridiagonal(BasisFamily family,
                                          const Eigen::VectorXd& diagonal,
                                          const Eigen::VectorXd& subdiagonal) {
  const auto n = diagonal.size();
  if (n < 1 || subdiagonal.size() != n - 1) {
    throw std::invalid_argument("Hamiltonian::from_tridiagonal: size mismatch");
  }

  Hamiltonian h;
  h.family_ = family;
  h.entries_ = Eigen::MatrixXd::Zero(n, n);
  h.entries_.diagonal() = diagonal;
  if (n > 1) {
    h.entries_.diagonal(1) = subdiagonal;
    h.entries_.diagonal(-1) = subdiagonal;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, subdiagonal, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hamiltonian: tridiagonal eigendecomposition failed");
  }
  h.eigenvalues_ = solver.eigenvalues();
  h.eigenvectors_ = solver.eigenvectors();
  return h;
}

StateVector evolve(const Hamiltonian& h, const StateVector& psi, double t) {
  if (h.dim() != psi.dim() || h.family() != psi.family()) {
    throw std::invalid_argument("evolve: dimension or basis mismatch");
  }
  const Eigen::MatrixXd& v = h.eigenvectors();
  Eigen::VectorXcd in_eigenbasis = v.transpose() * psi.amps();
  in_eigenbasis.array() *= phase_vector(h.eigenvalues(), t).array();
  return StateVector(psi.family(), v * in_eigenbasis);
}

DensityMatrix evolve(const Hamiltonian& h, const DensityMatrix& rho, double t) {
  if (h.dim() != rho.dim() || h.family() != rho.family()) {
    throw std::invalid_argument("evolve: dimension or basis mismatch");
  }
  const Eigen::MatrixXd& v = h.eigenvectors();
  const Eigen::VectorXcd phases = phase_vector(h.eigenvalues(), t);
  Eigen::MatrixXcd in_eigenbasis = v.transpose() * rho.entries() * v;
  in_eigenbasis = phases.asDiagonal() * in_eigenbasis * phases.conjugate().asDiagonal();
  return DensityMatrix(rho.family(), v * in_eigenbasis * v.transpose());
}

Eigen::MatrixXcd propagator(const Hamiltonian& h, double t) {
  const Eigen::MatrixXd& v = h.eigenvectors();
  const Eigen::VectorXcd phases = phase_vector(h.eigenvalues(), t);
  return v * phases.asDiagonal() * v.transpose();
}

}  // namespace noonsim
