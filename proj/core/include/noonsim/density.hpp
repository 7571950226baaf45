#pragma once

#include <Eigen/Dense>

#include "noonsim/basis.hpp"
#include "noonsim/state.hpp"

namespace noonsim {

// Hermitian matrix over a labeled basis. The constructor rejects input whose
// anti-Hermitian part exceeds 1e-12 (relative to the largest entry) and stores
// the exactly symmetrized matrix. The trace is not forced to one, so
// unnormalized monitored densities can be represented; normalized() rescales.
class DensityMatrix {
 public:
  DensityMatrix(BasisFamily family, const Eigen::MatrixXcd& entries);

  static DensityMatrix pure(const StateVector& psi);

  int dim() const { return static_cast<int>(entries_.rows()); }
  BasisFamily family() const { return family_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  double trace_real() const { return trace_; }

  DensityMatrix normalized() const;

 private:
  BasisFamily family_;
  Eigen::MatrixXcd entries_;
  double trace_;
};

// Tr[rho^2]; equals 1 for pure states and 1/dim for the maximally mixed state.
double purity(const DensityMatrix& rho);

}  // namespace noonsim
