#include <benchmark/benchmark.h>

#include <numbers>

#include "noonsim/cavities.hpp"
#include "noonsim/jaynes_cummings.hpp"
#include "noonsim/monitor.hpp"

namespace {

using namespace noonsim;

CavityParams params_for(int n) {
  CavityParams p;
  p.n_photons = n;
  return p;
}

void SpectralDecomposition(benchmark::State& state) {
  const CavityParams p = params_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Hamiltonian h = build_two_cavity_hamiltonian(p);
    benchmark::DoNotOptimize(h.eigenvalues().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SpectralDecomposition)->RangeMultiplier(4)->Range(64, 2048)->Complexity();

void EvolveState(benchmark::State& state) {
  const CavityParams p = params_for(static_cast<int>(state.range(0)));
  const Hamiltonian h = build_two_cavity_hamiltonian(p);
  const StateVector psi = two_cavity_fock(p.n_photons, p.n_photons);
  double t = 0.1;
  for (auto _ : state) {
    StateVector out = evolve(h, psi, t);
    benchmark::DoNotOptimize(out.amps().data());
    t += 0.1;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(EvolveState)->RangeMultiplier(4)->Range(64, 2048)->Complexity();

void MonitoredStateStep(benchmark::State& state) {
  const CavityParams p = params_for(static_cast<int>(state.range(0)));
  const Hamiltonian h = build_two_cavity_hamiltonian(p);
  const StateVector ref = two_cavity_fock(p.n_photons, p.n_photons);
  MonitorWalk walk(MonitorProtocol{h, ref, 0.5, 1}, ref);
  for (auto _ : state) {
    walk.advance();
    benchmark::DoNotOptimize(walk.survival_norm());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(MonitoredStateStep)->RangeMultiplier(4)->Range(64, 2048)->Complexity();

// The eigenbasis density walk: O(dim^2) per cycle instead of the O(dim^3)
// pair of dense conjugations.
void MonitoredDensityStep(benchmark::State& state) {
  const CavityParams p = params_for(static_cast<int>(state.range(0)));
  const Hamiltonian h = build_two_cavity_hamiltonian(p);
  const StateVector ref = two_cavity_fock(p.n_photons, p.n_photons);
  MonitoredDensityWalk walk(MonitorProtocol{h, ref, 0.5, 1},
                            DensityMatrix::pure(ref));
  for (auto _ : state) {
    walk.advance();
    benchmark::DoNotOptimize(walk.trace());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(MonitoredDensityStep)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void MonitoredDensityStepNaive(benchmark::State& state) {
  const CavityParams p = params_for(static_cast<int>(state.range(0)));
  const Hamiltonian h = build_two_cavity_hamiltonian(p);
  const StateVector ref = two_cavity_fock(p.n_photons, p.n_photons);
  const Eigen::MatrixXcd u = propagator(h, 0.5);
  Eigen::MatrixXcd rho = DensityMatrix::pure(ref).entries();
  const Eigen::VectorXcd v = ref.amps();
  for (auto _ : state) {
    rho -= v * (v.adjoint() * rho);
    rho -= (rho * v) * v.adjoint();
    rho = u * rho * u.adjoint();
    benchmark::DoNotOptimize(rho.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(MonitoredDensityStepNaive)->RangeMultiplier(4)->Range(64, 512)->Complexity();

void JcMonitoredCycle(benchmark::State& state) {
  JCParams p;
  p.n_max = static_cast<int>(state.range(0));
  JCMonitoredWalk walk(p, JCEnsemble::uniform_mixed(p.n_max), 1.0);
  for (auto _ : state) {
    walk.advance();
    benchmark::DoNotOptimize(walk.trace());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(JcMonitoredCycle)->RangeMultiplier(2)->Range(15, 120)->Complexity();

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
