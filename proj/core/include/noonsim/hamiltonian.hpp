#pragma once

#include <Eigen/Dense>

#include "noonsim/basis.hpp"
#include "noonsim/density.hpp"
#include "noonsim/state.hpp"

namespace noonsim {

// Real-symmetric generator of evolution with its spectral decomposition
// computed once at construction and cached (hbar = 1 throughout, so the
// evolution phases are e^{-i E t}). Immutable; safe to share across threads.
class Hamiltonian {
 public:
  Hamiltonian(BasisFamily family, const Eigen::MatrixXd& entries);

  // Builds the dense matrix from its diagonal and first subdiagonal and
  // diagonalizes without forming intermediate Householder reflections.
  static Hamiltonian from_tridiagonal(BasisFamily family,
                                      const Eigen::VectorXd& diagonal,
                                      const Eigen::VectorXd& subdiagonal);

  int dim() const { return static_cast<int>(entries_.rows()); }
  BasisFamily family() const { return family_; }
  const Eigen::MatrixXd& matrix() const { return entries_; }

  // Ascending eigenvalues and the matching orthonormal eigenvector columns.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

 private:
  Hamiltonian() = default;

  BasisFamily family_ = BasisFamily::two_cavity;
  Eigen::MatrixXd entries_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

// V diag(e^{-i E t}) V^T |psi>. Preserves the norm and composes additively
// in t up to floating round-off.
StateVector evolve(const Hamiltonian& h, const StateVector& psi, double t);

// e^{-iHt} rho e^{+iHt}, applied through the cached eigenbasis.
DensityMatrix evolve(const Hamiltonian& h, const DensityMatrix& rho, double t);

// The dense unitary e^{-iHt}.
Eigen::MatrixXcd propagator(const Hamiltonian& h, double t);

}  // namespace noonsim
