#include "vdge/shot_sampler.hpp"

#include <cmath>

#include "vdge/error.hpp"

namespace vdge {

namespace {

void check_config(const ShotConfig& cfg, int n_qubits) {
  if (cfg.shots < 1) throw_error(errc::invalid_argument, "shots must be at least 1");
  if (!(cfg.readout_flip >= 0.0 && cfg.readout_flip <= 0.5)) {
    throw_error(errc::invalid_argument, "readout_flip must be in [0, 0.5]");
  }
  if (n_qubits < 1) throw_error(errc::invalid_qubit_count, "qubit count must be at least 1");
}

}  // namespace

double effective_fidelity(double f_exact, double readout_flip, int n_qubits) {
  if (readout_flip == 0.0) return f_exact;
  const double survive = std::pow(1.0 - readout_flip, n_qubits);
  return f_exact * survive + (1.0 - f_exact) * readout_flip;
}

double sample_fidelity(double f_exact, const ShotConfig& cfg, int n_qubits, Rng& rng) {
  check_config(cfg, n_qubits);
  if (!(f_exact >= 0.0 && f_exact <= 1.0)) {
    throw_error(errc::out_of_range, "exact fidelity must be in [0, 1]");
  }
  const double f_eff = effective_fidelity(f_exact, cfg.readout_flip, n_qubits);
  if (f_eff <= 0.0) return 0.0;
  if (f_eff >= 1.0) return 1.0;
  std::binomial_distribution<std::int64_t> counts(cfg.shots, f_eff);
  return static_cast<double>(counts(rng)) / static_cast<double>(cfg.shots);
}

}  // namespace vdge
