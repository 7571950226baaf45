#pragma once

#include <complex>

#include <Eigen/Dense>

#include "noonsim/basis.hpp"

namespace noonsim {

// Complex amplitude vector over a finite labeled basis. Immutable after
// construction; the squared norm is cached so unnormalized (monitored)
// states always carry their survival weight.
class StateVector {
 public:
  StateVector(BasisFamily family, Eigen::VectorXcd amps);

  static StateVector basis_state(BasisFamily family, int dim, int index);

  int dim() const { return static_cast<int>(amps_.size()); }
  BasisFamily family() const { return family_; }
  const Eigen::VectorXcd& amps() const { return amps_; }

  // Survival norm: sum of |amps_i|^2.
  double norm_sq() const { return norm_sq_; }
  bool is_normalized(double tol = 1e-12) const;

  StateVector normalized() const;

 private:
  BasisFamily family_;
  Eigen::VectorXcd amps_;
  double norm_sq_;
};

// <a|b> = sum_i conj(a_i) b_i. Conjugate-symmetric in its arguments.
std::complex<double> inner(const StateVector& a, const StateVector& b);

}  // namespace noonsim
