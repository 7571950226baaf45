#include "noonsim/density.hpp"

#include <cmath>
#include <stdexcept>

namespace noonsim {

DensityMatrix::DensityMatrix(BasisFamily family, const Eigen::MatrixXcd& entries)
    : family_(family) {
  if (entries.rows() < 1 || entries.rows() != entries.cols()) {
    throw std::invalid_argument("DensityMatrix: entries must be square and non-empty");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12 * scale)) {
    throw std::invalid_argument("DensityMatrix: entries are not Hermitian within 1e-12");
  }
  entries_ = 0.5 * (entries + entries.adjoint());
  trace_ = entries_.trace().real();
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.family(), psi.amps() * psi.amps().adjoint());
}

DensityMatrix DensityMatrix::normalized() const {
  if (!(trace_ > 0.0) || !std::isfinite(trace_)) {
    throw std::invalid_argument("DensityMatrix::normalized: non-positive trace");
  }
  return DensityMatrix(family_, entries_ / trace_);
}

double purity(const DensityMatrix& rho) {
  // Tr[rho^2] = sum_ij |rho_ij|^2 for Hermitian rho.
  return rho.entries().squaredNorm();
}

}  // namespace noonsim
