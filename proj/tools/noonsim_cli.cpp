// Command-line front end: deterministic CSV datasets for the two-cavity
// N00N measures, the monitored measurement protocol, and the cavity-qubit
// entanglement entropy.
//
// Exit codes: 0 success, 2 usage error, 3 numerical extinction, 4 I/O error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noonsim/cavities.hpp"
#include "noonsim/jaynes_cummings.hpp"
#include "noonsim/monitor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExtinction = 3;
constexpr int kExitIo = 4;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
  return buf;
}

// Single ordered writer; every row goes through here so an unwritable path
// or a failed write surfaces as exit code 4.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) {
        throw io_error("cannot open output path: " + path);
      }
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
  }

  void line(const std::string& text) {
    (*out_) << text << '\n';
    if (!*out_) {
      throw io_error("write failed");
    }
  }

  void row(const std::vector<std::string>& cells) {
    std::string joined;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) joined += ',';
      joined += cells[i];
    }
    line(joined);
  }

  void finish() {
    out_->flush();
    if (!*out_) {
      throw io_error("flush failed");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

struct UnitaryConfig {
  int n = 2;
  double j = 1.0;
  double omega0 = 0.0;
  double t_max = 6.283185307179586;
  double dt = 0.01;
  std::string hopping = "half_j";
  std::string out;
  int precision = 12;
};

struct MonitorConfig {
  int n = 2;
  double j = 1.0;
  double omega0 = 0.0;
  double tau = 0.0;
  int steps = 1;
  std::string out;
  int precision = 12;
};

struct JcConfig {
  int nmax = 15;
  double omega = 1.0;
  double omega_a = 1.0;
  double coupling = 0.1;
  std::string mode = "unitary";
  double t_max = 200.0;
  double dt = 0.1;
  double tau = 1.0;
  int steps = 300;
  std::string out;
  int precision = 12;
};

noonsim::CavityParams cavity_params(int n, double j, double omega0,
                                    const std::string& hopping) {
  noonsim::CavityParams p;
  p.n_photons = n;
  p.coupling = j;
  p.omega0 = omega0;
  p.hopping = hopping == "bare_j" ? noonsim::HoppingConvention::bare_j
                                  : noonsim::HoppingConvention::half_j;
  return p;
}

int run_unitary(const UnitaryConfig& cfg) {
  const noonsim::CavityParams p = cavity_params(cfg.n, cfg.j, cfg.omega0, cfg.hopping);
  const auto reports = noonsim::unitary_scan(p, cfg.t_max, cfg.dt);
  const auto entropies =
      noonsim::entropy_scan_unitary(p, noonsim::time_grid(cfg.t_max, cfg.dt));

  CsvWriter csv(cfg.out);
  csv.line("# noonsim unitary");
  csv.line("# n=" + std::to_string(cfg.n) + " j=" + fmt(cfg.j, cfg.precision) +
           " omega0=" + fmt(cfg.omega0, cfg.precision) +
           " t_max=" + fmt(cfg.t_max, cfg.precision) +
           " dt=" + fmt(cfg.dt, cfg.precision) + " hopping=" + cfg.hopping +
           " precision=" + std::to_string(cfg.precision));
  csv.line("# time unit: hbar/J (hbar = 1)");
  csv.line("t,abs_c0,abs_cN,p_e,fidelity_phi0,fidelity_phipi,delta,renyi2");

  for (std::size_t i = 0; i < reports.size(); ++i) {
    const noonsim::NoonReport& r = reports[i];
    const double weight = r.abs_c0 * r.abs_c0 + r.abs_cN * r.abs_cN;
    if (weight > 1.0 + 1e-10 ||
        std::abs(r.delta - (r.fidelity_phi0 - r.fidelity_phipi)) > 1e-10) {
      std::cerr << "noonsim: internal invariant violated at t=" << r.t << "\n";
      return kExitInvariant;
    }
    csv.row({fmt(r.t, cfg.precision), fmt(r.abs_c0, cfg.precision),
             fmt(r.abs_cN, cfg.precision), fmt(r.p_e, cfg.precision),
             fmt(r.fidelity_phi0, cfg.precision), fmt(r.fidelity_phipi, cfg.precision),
             fmt(r.delta, cfg.precision), fmt(entropies[i].second, cfg.precision)});
  }
  csv.finish();
  return kExitOk;
}

int run_monitor(const MonitorConfig& cfg) {
  const noonsim::CavityParams p = cavity_params(cfg.n, cfg.j, cfg.omega0, "half_j");
  const noonsim::Hamiltonian h = noonsim::build_two_cavity_hamiltonian(p);
  const noonsim::StateVector reference = noonsim::two_cavity_fock(cfg.n, cfg.n);
  const noonsim::StateVector target = noonsim::two_cavity_fock(cfg.n, 0);
  const noonsim::MonitorProtocol proto{h, reference, cfg.tau, cfg.steps};

  CsvWriter csv(cfg.out);
  csv.line("# noonsim monitor");
  csv.line("# n=" + std::to_string(cfg.n) + " j=" + fmt(cfg.j, cfg.precision) +
           " omega0=" + fmt(cfg.omega0, cfg.precision) +
           " tau=" + fmt(cfg.tau, cfg.precision) +
           " steps=" + std::to_string(cfg.steps) +
           " precision=" + std::to_string(cfg.precision));
  csv.line("# reference=|N,0> target=|0,N>; *_unnorm columns and "
           "fidelity/delta use the unnormalized monitored state, renyi2 the "
           "normalized one");
  csv.line("m,survival_norm,return_prob_unnorm,return_prob_norm,"
           "transition_prob_unnorm,transition_prob_norm,fidelity_phi0,delta,renyi2");

  noonsim::MonitorWalk walk(proto, reference);
  double previous_survival = 1.0;
  for (int m = 1; m <= cfg.steps; ++m) {
    walk.advance();
    const double survival = walk.survival_norm();
    if (survival > previous_survival + 1e-12) {
      std::cerr << "noonsim: survival norm increased at m=" << m << "\n";
      return kExitInvariant;
    }
    previous_survival = survival;

    try {
      const noonsim::StateVector unnorm = walk.unnormalized_state();
      const noonsim::StateVector norm = walk.normalized_state();
      const std::complex<double> c0 = inner(reference, unnorm);
      const std::complex<double> cN = inner(target, unnorm);
      const noonsim::NoonReport r = noonsim::noon_measures(c0, cN);
      const double renyi2 =
          noonsim::renyi2_entropy(Eigen::VectorXd(norm.amps().array().abs2()));

      csv.row({std::to_string(m), fmt(survival, cfg.precision),
               fmt(std::norm(c0), cfg.precision),
               fmt(std::norm(c0) / survival, cfg.precision),
               fmt(std::norm(cN), cfg.precision),
               fmt(std::norm(cN) / survival, cfg.precision),
               fmt(r.fidelity_phi0, cfg.precision), fmt(r.delta, cfg.precision),
               fmt(renyi2, cfg.precision)});
    } catch (const noonsim::extinction_error& e) {
      csv.line("# extinction: survival norm below 1e-300 at step " +
               std::to_string(e.step()));
      csv.finish();
      return kExitExtinction;
    }
  }
  csv.finish();
  return kExitOk;
}

int run_jc(const JcConfig& cfg) {
  noonsim::JCParams p;
  p.n_max = cfg.nmax;
  p.omega = cfg.omega;
  p.omega_a = cfg.omega_a;
  p.coupling = cfg.coupling;
  const noonsim::JCEnsemble ens = noonsim::JCEnsemble::uniform_mixed(p.n_max);

  CsvWriter csv(cfg.out);
  csv.line("# noonsim jc");
  std::string params = "# nmax=" + std::to_string(cfg.nmax) +
                       " omega=" + fmt(cfg.omega, cfg.precision) +
                       " omega_a=" + fmt(cfg.omega_a, cfg.precision) +
                       " coupling=" + fmt(cfg.coupling, cfg.precision) +
                       " mode=" + cfg.mode;
  if (cfg.mode == "unitary") {
    params += " t_max=" + fmt(cfg.t_max, cfg.precision) +
              " dt=" + fmt(cfg.dt, cfg.precision);
  } else {
    params += " tau=" + fmt(cfg.tau, cfg.precision) +
              " steps=" + std::to_string(cfg.steps);
  }
  params += " precision=" + std::to_string(cfg.precision);
  csv.line(params);
  csv.line("# basis: 2N states; block b couples |up,b> with |down,b+1>, photon "
           "indices 1..N+1");
  csv.line("# omega_a recorded only; the block matrices do not contain it");
  csv.line("# ensemble: uniform mixture over the N down basis states; shared "
           "projector reference = uniform superposition over the same support");
  if (cfg.mode == "monitored") {
    csv.line("# tau is dimensionless (tau*omega); step label is the "
             "measurement count m");
  }
  csv.line("step_or_time,renyi2,trace_check,mode");

  auto emit = [&](double t_or_step, double renyi2, double trace_check) -> bool {
    if (std::abs(trace_check - 1.0) > 1e-10) {
      std::cerr << "noonsim: reduced trace deviates from 1 at " << t_or_step << "\n";
      return false;
    }
    csv.row({fmt(t_or_step, cfg.precision), fmt(renyi2, cfg.precision),
             fmt(trace_check, cfg.precision), cfg.mode});
    return true;
  };

  if (cfg.mode == "unitary") {
    const auto scan =
        noonsim::jc_entropy_scan(p, ens, noonsim::time_grid(cfg.t_max, cfg.dt));
    for (const noonsim::JCScanPoint& point : scan) {
      if (!emit(point.t_or_step, point.renyi2, point.trace_check)) {
        return kExitInvariant;
      }
    }
  } else {
    noonsim::JCMonitoredWalk walk(p, ens, cfg.tau);
    for (int m = 1; m <= cfg.steps; ++m) {
      walk.advance();
      try {
        const Eigen::MatrixXcd reduced = walk.reduced_photon_matrix(p);
        if (!emit(m, -std::log2(reduced.squaredNorm()), reduced.trace().real())) {
          return kExitInvariant;
        }
      } catch (const noonsim::extinction_error& e) {
        csv.line("# extinction: survival trace below 1e-300 at step " +
                 std::to_string(e.step()));
        csv.finish();
        return kExitExtinction;
      }
    }
  }
  csv.finish();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noonsim: monitored photon dynamics in coupled cavities and a "
               "cavity-qubit system"};
  app.require_subcommand(1);

  UnitaryConfig ucfg;
  CLI::App* unitary = app.add_subcommand(
      "unitary", "Unitary two-cavity scan: N00N measures and Renyi-2 entropy");
  unitary->add_option("--n", ucfg.n, "Photon number N")->required()
      ->check(CLI::PositiveNumber);
  unitary->add_option("--j", ucfg.j, "Cavity coupling J")->check(CLI::PositiveNumber);
  unitary->add_option("--omega0", ucfg.omega0, "Single-mode frequency omega0");
  unitary->add_option("--t-max", ucfg.t_max, "Scan end (units hbar/J)");
  unitary->add_option("--dt", ucfg.dt, "Grid step");
  unitary->add_option("--hopping", ucfg.hopping, "Hopping convention")
      ->check(CLI::IsMember({"half_j", "bare_j"}));
  unitary->add_option("--out", ucfg.out, "Output CSV path (default: stdout)");
  unitary->add_option("--precision", ucfg.precision, "Significant digits")
      ->check(CLI::Range(1, 17));

  MonitorConfig mcfg;
  CLI::App* monitor = app.add_subcommand(
      "monitor", "Monitored two-cavity evolution with step tau");
  monitor->add_option("--n", mcfg.n, "Photon number N")->required()
      ->check(CLI::PositiveNumber);
  monitor->add_option("--j", mcfg.j, "Cavity coupling J")->check(CLI::PositiveNumber);
  monitor->add_option("--omega0", mcfg.omega0, "Single-mode frequency omega0");
  monitor->add_option("--tau", mcfg.tau, "Time between measurements")->required();
  monitor->add_option("--steps", mcfg.steps, "Number of measurement cycles m")
      ->required()->check(CLI::PositiveNumber);
  monitor->add_option("--out", mcfg.out, "Output CSV path (default: stdout)");
  monitor->add_option("--precision", mcfg.precision, "Significant digits")
      ->check(CLI::Range(1, 17));

  JcConfig jcfg;
  CLI::App* jc = app.add_subcommand(
      "jc", "Cavity-qubit photon entropy, unitary or monitored");
  jc->add_option("--nmax", jcfg.nmax, "Highest photon block N")
      ->check(CLI::PositiveNumber);
  jc->add_option("--omega", jcfg.omega, "Cavity frequency");
  jc->add_option("--omega-a", jcfg.omega_a, "Qubit frequency (metadata only)");
  jc->add_option("--coupling", jcfg.coupling, "Qubit-cavity coupling Omega");
  jc->add_option("--mode", jcfg.mode, "unitary or monitored")->required()
      ->check(CLI::IsMember({"unitary", "monitored"}));
  jc->add_option("--t-max", jcfg.t_max, "Scan end, unitary mode (units 1/omega)");
  jc->add_option("--dt", jcfg.dt, "Grid step, unitary mode");
  jc->add_option("--tau", jcfg.tau, "Time between measurements (tau*omega)");
  jc->add_option("--steps", jcfg.steps, "Measurement cycles, monitored mode")
      ->check(CLI::PositiveNumber);
  jc->add_option("--out", jcfg.out, "Output CSV path (default: stdout)");
  jc->add_option("--precision", jcfg.precision, "Significant digits")
      ->check(CLI::Range(1, 17));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(unitary)) {
      return run_unitary(ucfg);
    }
    if (app.got_subcommand(monitor)) {
      return run_monitor(mcfg);
    }
    return run_jc(jcfg);
  } catch (const io_error& e) {
    std::cerr << "noonsim: " << e.what() << "\n";
    return kExitIo;
  } catch (const noonsim::extinction_error& e) {
    std::cerr << "noonsim: " << e.what() << "\n";
    return kExitExtinction;
  } catch (const std::invalid_argument& e) {
    std::cerr << "noonsim: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "noonsim: " << e.what() << "\n";
    return kExitInvariant;
  }
}
