#pragma once

#include <cstdint>

#include "vdge/rng.hpp"

namespace vdge {

struct ShotConfig {
  std::int64_t shots = 8192;  // ensemble size N per fidelity estimate
  double readout_flip = 0.0;  // per-qubit readout bit-flip probability, [0, 0.5]
};

// Success probability of the all-zeros outcome under the readout model:
//   f_eff = f * (1-p)^n + (1-f) * p.
// The first term is the chance that a true all-zeros outcome survives n
// independent readout flips; the second treats a single dominant flip of a
// non-zero outcome into all-zeros as the worst case. Qualitative knob only;
// it reproduces the order of magnitude of hardware readout error, not its
// calibrated value.
double effective_fidelity(double f_exact, double readout_flip, int n_qubits);

// Finite-ensemble estimate n0/N with n0 ~ Binomial(N, f_eff). Only the
// all-zeros count enters the estimate, so the 2^n-outcome multinomial
// reduces exactly to a binomial.
double sample_fidelity(double f_exact, const ShotConfig& cfg, int n_qubits, Rng& rng);

}  // namespace vdge
