#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vdge/rng.hpp"

namespace vdge {

using cplx = std::complex<double>;

// A pair below this squared norm is degenerate and rejected rather than
// silently renormalized; the optimizer treats it as an invalid iterate.
inline constexpr double kEpsilonNorm = 1e-12;

// Unnormalized single-qubit state alpha|0> + beta|1>.
struct QubitPair {
  cplx alpha{};
  cplx beta{};
};

inline double pair_norm2(const QubitPair& p) { return std::norm(p.alpha) + std::norm(p.beta); }
inline bool pair_valid(const QubitPair& p) { return pair_norm2(p) > kEpsilonNorm; }

// Separable-state ansatz: one (alpha, beta) pair per qubit, 2n complex
// parameters in total. The physical state is invariant under rescaling any
// single pair by a nonzero complex number, so no gauge is fixed.
struct ProductParams {
  std::vector<QubitPair> pairs;

  int num_qubits() const { return static_cast<int>(pairs.size()); }
  bool all_valid() const {
    for (const auto& p : pairs)
      if (!pair_valid(p)) return false;
    return true;
  }
};

// Rescales to unit norm by a positive real factor. Throws degenerate_pair
// when the squared norm is at or below kEpsilonNorm.
QubitPair normalize_pair(const QubitPair& pair);

// Each pair entry is an independent standard complex Gaussian, which makes
// the normalized pair Haar-uniform on the single-qubit state space.
ProductParams haar_random_params(int n, Rng& rng);

struct PureState;

// Dense 2^n-amplitude tensor product of the normalized pairs, qubit 1 most
// significant: index of |a_1 ... a_n> is sum_i a_i 2^(n-i).
PureState params_to_dense_product(const ProductParams& params);

// Flat optimizer coordinates: [alpha_1, beta_1, alpha_2, beta_2, ...].
std::vector<cplx> flatten_params(const ProductParams& params);
ProductParams unflatten_params(std::span<const cplx> flat);

}  // namespace vdge
