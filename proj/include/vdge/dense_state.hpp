#pragma once

#include <cstdint>
#include <vector>

#include "vdge/product_ansatz.hpp"

namespace vdge {

// Dense backend refuses more qubits than this (2^26 amplitudes, ~1 GiB).
// Larger systems go through the MPS backend.
inline constexpr int kMaxDenseQubits = 26;

// Normalized n-qubit pure state as a dense amplitude vector. Index
// convention: qubit 1 is the most significant bit.
struct PureState {
  int n = 0;
  std::vector<cplx> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
};

// (|0...0> + |1...1>)/sqrt(2), n >= 2.
PureState make_ghz(int n);

// Uniform single-excitation superposition, amplitude 1/sqrt(n) at the n
// indices 2^k, n >= 2.
PureState make_w(int n);

// sqrt(s)|GHZ_3> + e^(i phi) sqrt(1-s)|W_3>; disjoint supports keep the
// result normalized for any s in [0, 1].
PureState make_gw(double s, double phi);

// 2^n independent standard complex Gaussian amplitudes, normalized.
PureState haar_random_state(int n, Rng& rng);

double state_norm(const PureState& state);

// |<phi(theta)|psi>|^2 by sequential per-qubit contraction (qubit 1 first),
// O(2^n) total, clamped to [0, 1].
double exact_fidelity(const PureState& state, const ProductParams& params);

}  // namespace vdge
