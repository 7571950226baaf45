#pragma once

#include <stdexcept>
#include <string>

namespace noonsim {

// Which labeled basis a state or operator lives in.
enum class BasisFamily { two_cavity, cavity_qubit };

enum class Spin { down, up };

// |left, right> Fock label on the fixed-N two-cavity sector (left + right = N).
struct TwoCavityLabel {
  int left = 0;
  int right = 0;
};

// |sigma, n> label for the cavity-qubit space.
struct CavityQubitLabel {
  Spin sigma = Spin::down;
  int n = 1;
};

// Two-cavity sector: index k <-> |N-k, k> for k = 0..N, so index 0 is |N,0>
// and index N is |0,N>.
inline int two_cavity_dim(int n_photons) { return n_photons + 1; }

inline TwoCavityLabel two_cavity_label(int n_photons, int index) {
  if (index < 0 || index > n_photons) {
    throw std::invalid_argument("two_cavity_label: index out of range");
  }
  return {n_photons - index, index};
}

inline int two_cavity_index(int n_photons, int left_count) {
  if (left_count < 0 || left_count > n_photons) {
    throw std::invalid_argument("two_cavity_index: left count out of range");
  }
  return n_photons - left_count;
}

// Cavity-qubit space: 2N states grouped into coupling blocks b = 1..N.
// Block b occupies indices 2(b-1) <-> |up,b> and 2(b-1)+1 <-> |down,b+1>:
// a qubit flip changes the photon number by one, so the up sector covers
// photon numbers 1..N and the down sector 2..N+1 (there is no |down,1>).
inline int cavity_qubit_dim(int n_max) { return 2 * n_max; }

inline CavityQubitLabel cavity_qubit_label(int index) {
  if (index < 0) {
    throw std::invalid_argument("cavity_qubit_label: negative index");
  }
  if (index % 2 == 0) {
    return {Spin::up, index / 2 + 1};
  }
  return {Spin::down, (index - 1) / 2 + 2};
}

inline int cavity_qubit_index(const CavityQubitLabel& label, int n_max) {
  if (label.sigma == Spin::up) {
    if (label.n < 1 || label.n > n_max) {
      throw std::invalid_argument("cavity_qubit_index: |up,n> needs 1 <= n <= " +
                                  std::to_string(n_max));
    }
    return 2 * (label.n - 1);
  }
  if (label.n < 2 || label.n > n_max + 1) {
    throw std::invalid_argument("cavity_qubit_index: |down,n> needs 2 <= n <= " +
                                std::to_string(n_max + 1));
  }
  return 2 * (label.n - 2) + 1;
}

}  // namespace noonsim
