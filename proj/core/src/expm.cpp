#include "noonsim/expm.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace noonsim {

Eigen::MatrixXcd expm_taylor_oracle(const Hamiltonian& h, double t) {
  const int dim = h.dim();
  if (dim > 64) {
    throw std::invalid_argument("expm_taylor_oracle: dim > 64; oracle is for small instances");
  }

  const std::complex<double> minus_i(0.0, -1.0);
  Eigen::MatrixXcd a = minus_i * t * h.matrix().cast<std::complex<double>>();

  // Scale so the Taylor series converges fast, then square back.
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    a /= std::pow(2.0, squarings);
  }

  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
  for (int k = 1; k <= 64; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
  }
  return result;
}

}  // namespace noonsim
