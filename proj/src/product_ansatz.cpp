#include "vdge/product_ansatz.hpp"

#include <cmath>

#include "vdge/dense_state.hpp"
#include "vdge/error.hpp"

namespace vdge {

QubitPair normalize_pair(const QubitPair& pair) {
  const double norm2 = pair_norm2(pair);
  if (!(norm2 > kEpsilonNorm)) {
    throw_error(errc::degenerate_pair, "qubit pair norm below degeneracy threshold");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  return {pair.alpha * inv, pair.beta * inv};
}

ProductParams haar_random_params(int n, Rng& rng) {
  if (n < 1) throw_error(errc::invalid_qubit_count, "qubit count must be at least 1");
  ProductParams params;
  params.pairs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    QubitPair p;
    p.alpha = standard_complex_gaussian(rng);
    p.beta = standard_complex_gaussian(rng);
    params.pairs.push_back(p);
  }
  return params;
}

PureState params_to_dense_product(const ProductParams& params) {
  const int n = params.num_qubits();
  if (n < 1) throw_error(errc::invalid_qubit_count, "qubit count must be at least 1");
  if (n > kMaxDenseQubits) throw_error(errc::too_large, "dense product state limited to 26 qubits");

  PureState state;
  state.n = n;
  state.amplitudes.assign(1, cplx{1.0, 0.0});
  state.amplitudes.reserve(std::size_t{1} << n);
  // Append qubits left to right so qubit 1 ends up most significant.
  for (const auto& raw : params.pairs) {
    const QubitPair p = normalize_pair(raw);
    std::vector<cplx> next(state.amplitudes.size() * 2);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
      next[2 * i] = state.amplitudes[i] * p.alpha;
      next[2 * i + 1] = state.amplitudes[i] * p.beta;
    }
    state.amplitudes = std::move(next);
  }
  return state;
}

std::vector<cplx> flatten_params(const ProductParams& params) {
  std::vector<cplx> flat;
  flat.reserve(params.pairs.size() * 2);
  for (const auto& p : params.pairs) {
    flat.push_back(p.alpha);
    flat.push_back(p.beta);
  }
  return flat;
}

ProductParams unflatten_params(std::span<const cplx> flat) {
  if (flat.size() % 2 != 0) {
    throw_error(errc::dimension_mismatch, "flat parameter vector must have even length");
  }
  ProductParams params;
  params.pairs.resize(flat.size() / 2);
  for (std::size_t i = 0; i < params.pairs.size(); ++i) {
    params.pairs[i] = {flat[2 * i], flat[2 * i + 1]};
  }
  return params;
}

}  // namespace vdge
