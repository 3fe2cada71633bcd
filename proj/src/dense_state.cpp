#include "vdge/dense_state.hpp"

#include <algorithm>
#include <cmath>

#include "vdge/error.hpp"

namespace vdge {

namespace {

void check_qubit_count(int n, int minimum) {
  if (n < minimum) throw_error(errc::invalid_qubit_count, "qubit count too small");
  if (n > kMaxDenseQubits) throw_error(errc::too_large, "dense backend limited to 26 qubits");
}

}  // namespace

PureState make_ghz(int n) {
  check_qubit_count(n, 2);
  PureState state;
  state.n = n;
  state.amplitudes.assign(std::size_t{1} << n, cplx{});
  const double amp = 1.0 / std::sqrt(2.0);
  state.amplitudes.front() = amp;
  state.amplitudes.back() = amp;
  return state;
}

PureState make_w(int n) {
  check_qubit_count(n, 2);
  PureState state;
  state.n = n;
  state.amplitudes.assign(std::size_t{1} << n, cplx{});
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    state.amplitudes[std::size_t{1} << k] = amp;
  }
  return state;
}

PureState make_gw(double s, double phi) {
  if (!(s >= 0.0 && s <= 1.0)) throw_error(errc::out_of_range, "s must be in [0, 1]");
  PureState state;
  state.n = 3;
  state.amplitudes.assign(8, cplx{});
  const double ghz_amp = std::sqrt(s) / std::sqrt(2.0);
  const cplx w_amp = std::polar(std::sqrt(1.0 - s) / std::sqrt(3.0), phi);
  state.amplitudes[0] = ghz_amp;
  state.amplitudes[7] = ghz_amp;
  state.amplitudes[1] = w_amp;
  state.amplitudes[2] = w_amp;
  state.amplitudes[4] = w_amp;
  return state;
}

PureState haar_random_state(int n, Rng& rng) {
  check_qubit_count(n, 1);
  PureState state;
  state.n = n;
  state.amplitudes.resize(std::size_t{1} << n);
  double norm2 = 0.0;
  for (auto& amp : state.amplitudes) {
    amp = standard_complex_gaussian(rng);
    norm2 += std::norm(amp);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& amp : state.amplitudes) amp *= inv;
  return state;
}

double state_norm(const PureState& state) {
  double norm2 = 0.0;
  for (const auto& amp : state.amplitudes) norm2 += std::norm(amp);
  return std::sqrt(norm2);
}

double exact_fidelity(const PureState& state, const ProductParams& params) {
  if (params.num_qubits() != state.n) {
    throw_error(errc::dimension_mismatch, "parameter count does not match qubit count");
  }
  // Contract <phi_j| against the most significant free qubit, j = 1..n.
  std::vector<cplx> v = state.amplitudes;
  for (const auto& raw : params.pairs) {
    const QubitPair p = normalize_pair(raw);
    const cplx a = std::conj(p.alpha);
    const cplx b = std::conj(p.beta);
    const std::size_t half = v.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
      v[i] = a * v[i] + b * v[half + i];
    }
    v.resize(half);
  }
  const double f = std::norm(v[0]);
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace vdge
