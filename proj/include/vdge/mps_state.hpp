#pragma once

#include <vector>

#include "vdge/dense_state.hpp"
#include "vdge/product_ansatz.hpp"

namespace vdge {

inline constexpr int kMaxMpsToDenseQubits = 20;

// Rank-3 site tensor with index order (left bond, physical, right bond),
// stored row-major as data[(l*2 + s)*right + r].
struct MpsTensor {
  int left = 1;
  int right = 1;
  std::vector<cplx> data;

  MpsTensor() = default;
  MpsTensor(int l, int r) : left(l), right(r), data(static_cast<std::size_t>(l) * 2 * r) {}

  cplx& at(int l, int s, int r) { return data[(static_cast<std::size_t>(l) * 2 + s) * right + r]; }
  const cplx& at(int l, int s, int r) const {
    return data[(static_cast<std::size_t>(l) * 2 + s) * right + r];
  }
};

// Matrix product state: n site tensors with matching adjacent bonds and
// boundary bonds of size 1. Constructors and normalize_mps keep <psi|psi> = 1.
struct MpsState {
  int n = 0;
  std::vector<MpsTensor> tensors;

  std::vector<int> bond_dims() const;  // n+1 entries, boundaries included
};

// Bond-dimension-2 GHZ / W representations, n >= 2.
MpsState mps_ghz(int n);
MpsState mps_w(int n);

// Adds an independent complex Gaussian of mean 0 and variance lambda to
// every tensor entry (real and imaginary parts carry variance lambda/2
// each), then renormalizes.
MpsState perturb_mps(const MpsState& mps, double lambda, Rng& rng);

// Rescales every tensor by a common scalar so <psi|psi> = 1.
MpsState normalize_mps(const MpsState& mps);

// Squared global norm <psi|psi>.
double mps_norm2(const MpsState& mps);

// |<phi(theta)|psi>|^2 by left-to-right transfer contraction, O(n chi^2).
double exact_fidelity(const MpsState& mps, const ProductParams& params);

// Full contraction to a dense state, n <= kMaxMpsToDenseQubits.
PureState mps_to_dense(const MpsState& mps);

}  // namespace vdge
