#include "noonsim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace noonsim {

StateVector::StateVector(BasisFamily family, Eigen::VectorXcd amps)
    : family_(family), amps_(std::move(amps)) {
  if (amps_.size() < 1) {
    throw std::invalid_argument("StateVector: dimension must be positive");
  }
  norm_sq_ = amps_.squaredNorm();
}

StateVector StateVector::basis_state(BasisFamily family, int dim, int index) {
  if (dim < 1) {
    throw std::invalid_argument("StateVector::basis_state: dimension must be positive");
  }
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("StateVector::basis_state: index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps(index) = 1.0;
  return StateVector(family, std::move(amps));
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_sq_ - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  if (norm_sq_ <= 0.0 || !std::isfinite(norm_sq_)) {
    throw std::invalid_argument("StateVector::normalized: vanishing norm");
  }
  return StateVector(family_, amps_ / std::sqrt(norm_sq_));
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim() || a.family() != b.family()) {
    throw std::invalid_argument("inner: dimension or basis mismatch");
  }
  return a.amps().dot(b.amps());
}

}  // namespace noonsim
