#pragma once

#include <cstdint>

#include "vdge/dense_state.hpp"
#include "vdge/mps_state.hpp"
#include "vdge/product_ansatz.hpp"

namespace vdge {

// Classical reference solver for the entanglement eigenvalue: multi-start
// alternating rank-1 approximation. Coordinate ascent is exactly solvable
// per qubit, so many Haar starts give a dependency-free global reference.
struct OracleConfig {
  std::int64_t starts = 50;
  std::int64_t max_sweeps = 500;
  double tol = 1e-12;  // convergence threshold on fidelity change per sweep
  std::uint64_t seed = 0;
  int threads = 1;  // starts are independent; reduction is ordered
};

struct SweepResult {
  ProductParams params;
  double fidelity;
};

// One full sweep, qubit 1 to n: each pair is replaced by the normalized
// partial contraction of psi against all other current pairs (the exact
// single-qubit maximizer). Fidelity is non-decreasing across the sweep.
// A partial contraction with norm <= 1e-300 re-randomizes that pair.
SweepResult alternating_sweep(const PureState& state, const ProductParams& params, Rng& rng);
SweepResult alternating_sweep(const MpsState& state, const ProductParams& params, Rng& rng);

struct OracleResult {
  double e;        // GME, 1 - lambda2
  double lambda2;  // entanglement eigenvalue
  ProductParams argmax;
  std::int64_t best_start = 0;
};

// Best of `starts` Haar-initialized sweep descents, each run to |dF| < tol
// or max_sweeps. Ties between equally good starts go to the lowest index.
OracleResult reference_gme(const PureState& state, const OracleConfig& cfg);
OracleResult reference_gme(const MpsState& state, const OracleConfig& cfg);

// Independent two-qubit cross-check: lambda2 is the largest squared Schmidt
// coefficient, from the 2x2 Gram matrix of the reshaped amplitudes.
double schmidt_gme_2q(const PureState& state);

}  // namespace vdge
