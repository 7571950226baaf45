#pragma once

#include <Eigen/Dense>

#include "noonsim/hamiltonian.hpp"

namespace noonsim {

// Scaling-and-squaring Taylor evaluation of e^{-iHt} for small instances
// (dim <= 64). Deliberately avoids the spectral decomposition so it can
// serve as an independent cross-check of `evolve` in tests.
Eigen::MatrixXcd expm_taylor_oracle(const Hamiltonian& h, double t);

}  // namespace noonsim
