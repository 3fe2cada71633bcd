#include "vdge/mps_state.hpp"

#include <algorithm>
#include <cmath>

#include "vdge/error.hpp"

namespace vdge {

namespace {

// log <psi|psi> via transfer-matrix contraction with running rescale, so
// long unnormalized chains neither overflow nor underflow.
double mps_log_norm2(const MpsState& mps) {
  // E[l_bra * dl + l_ket], starts as the 1x1 identity on the left boundary.
  std::vector<cplx> env{cplx{1.0, 0.0}};
  int dim = 1;
  double log_scale = 0.0;
  for (const auto& t : mps.tensors) {
    // T[l_bra, s, r] = sum_l E[l_bra, l] A[l, s, r]
    std::vector<cplx> tmp(static_cast<std::size_t>(dim) * 2 * t.right);
    for (int lb = 0; lb < dim; ++lb) {
      for (int s = 0; s < 2; ++s) {
        for (int r = 0; r < t.right; ++r) {
          cplx acc{};
          for (int l = 0; l < dim; ++l) {
            acc += env[static_cast<std::size_t>(lb) * dim + l] * t.at(l, s, r);
          }
          tmp[(static_cast<std::size_t>(lb) * 2 + s) * t.right + r] = acc;
        }
      }
    }
    // E'[r_bra, r_ket] = sum_{l_bra, s} conj(A[l_bra, s, r_bra]) T[l_bra, s, r_ket]
    std::vector<cplx> next(static_cast<std::size_t>(t.right) * t.right);
    for (int rb = 0; rb < t.right; ++rb) {
      for (int r = 0; r < t.right; ++r) {
        cplx acc{};
        for (int lb = 0; lb < dim; ++lb) {
          for (int s = 0; s < 2; ++s) {
            acc += std::conj(t.at(lb, s, rb)) * tmp[(static_cast<std::size_t>(lb) * 2 + s) * t.right + r];
          }
        }
        next[static_cast<std::size_t>(rb) * t.right + r] = acc;
      }
    }
    double m = 0.0;
    for (const auto& e : next) m = std::max(m, std::abs(e));
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw_error(errc::zero_norm, "matrix product state has zero or non-finite norm");
    }
    for (auto& e : next) e /= m;
    log_scale += std::log(m);
    env = std::move(next);
    dim = t.right;
  }
  const double e00 = env[0].real();
  if (!(e00 > 0.0)) throw_error(errc::zero_norm, "matrix product state has zero norm");
  return std::log(e00) + log_scale;
}

void check_family_qubits(int n) {
  if (n < 2) throw_error(errc::invalid_qubit_count, "qubit count must be at least 2");
}

}  // namespace

std::vector<int> MpsState::bond_dims() const {
  std::vector<int> dims;
  dims.reserve(tensors.size() + 1);
  dims.push_back(tensors.empty() ? 1 : tensors.front().left);
  for (const auto& t : tensors) dims.push_back(t.right);
  return dims;
}

MpsState mps_ghz(int n) {
  check_family_qubits(n);
  MpsState mps;
  mps.n = n;
  mps.tensors.reserve(static_cast<std::size_t>(n));
  const double amp = 1.0 / std::sqrt(2.0);

  MpsTensor first(1, 2);
  first.at(0, 0, 0) = amp;
  first.at(0, 1, 1) = amp;
  mps.tensors.push_back(std::move(first));
  for (int j = 1; j + 1 < n; ++j) {
    MpsTensor mid(2, 2);
    mid.at(0, 0, 0) = 1.0;
    mid.at(1, 1, 1) = 1.0;
    mps.tensors.push_back(std::move(mid));
  }
  MpsTensor last(2, 1);
  last.at(0, 0, 0) = 1.0;
  last.at(1, 1, 0) = 1.0;
  mps.tensors.push_back(std::move(last));
  return mps;
}

MpsState mps_w(int n) {
  check_family_qubits(n);
  MpsState mps;
  mps.n = n;
  mps.tensors.reserve(static_cast<std::size_t>(n));
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));

  // Bond state 0: no excitation placed yet; bond state 1: one placed.
  MpsTensor first(1, 2);
  first.at(0, 0, 0) = amp;
  first.at(0, 1, 1) = amp;
  mps.tensors.push_back(std::move(first));
  for (int j = 1; j + 1 < n; ++j) {
    MpsTensor mid(2, 2);
    mid.at(0, 0, 0) = 1.0;
    mid.at(0, 1, 1) = 1.0;
    mid.at(1, 0, 1) = 1.0;
    mps.tensors.push_back(std::move(mid));
  }
  MpsTensor last(2, 1);
  last.at(0, 1, 0) = 1.0;
  last.at(1, 0, 0) = 1.0;
  mps.tensors.push_back(std::move(last));
  return mps;
}

MpsState perturb_mps(const MpsState& mps, double lambda, Rng& rng) {
  if (!(lambda >= 0.0)) throw_error(errc::out_of_range, "perturbation variance must be >= 0");
  MpsState out = mps;
  // Complex Gaussian of total variance lambda: each component carries half.
  std::normal_distribution<double> noise(0.0, std::sqrt(0.5 * lambda));
  for (auto& t : out.tensors) {
    for (auto& e : t.data) {
      const double re = noise(rng);
      const double im = noise(rng);
      e += cplx{re, im};
    }
  }
  return normalize_mps(out);
}

MpsState normalize_mps(const MpsState& mps) {
  const double log_norm2 = mps_log_norm2(mps);
  if (log_norm2 < 2.0 * std::log(1e-300)) {
    throw_error(errc::zero_norm, "matrix product state norm below 1e-300");
  }
  const double site_scale = std::exp(-log_norm2 / (2.0 * mps.n));
  MpsState out = mps;
  for (auto& t : out.tensors) {
    for (auto& e : t.data) e *= site_scale;
  }
  return out;
}

double mps_norm2(const MpsState& mps) { return std::exp(mps_log_norm2(mps)); }

double exact_fidelity(const MpsState& mps, const ProductParams& params) {
  if (params.num_qubits() != mps.n) {
    throw_error(errc::dimension_mismatch, "parameter count does not match qubit count");
  }
  // Row vector through the chain: v <- v * M_j, M_j = sum_s conj(phi_j[s]) A_j[:, s, :].
  std::vector<cplx> v{cplx{1.0, 0.0}};
  for (int j = 0; j < mps.n; ++j) {
    const QubitPair p = normalize_pair(params.pairs[static_cast<std::size_t>(j)]);
    const cplx a = std::conj(p.alpha);
    const cplx b = std::conj(p.beta);
    const MpsTensor& t = mps.tensors[static_cast<std::size_t>(j)];
    std::vector<cplx> next(static_cast<std::size_t>(t.right));
    for (int r = 0; r < t.right; ++r) {
      cplx acc{};
      for (int l = 0; l < t.left; ++l) {
        acc += v[static_cast<std::size_t>(l)] * (a * t.at(l, 0, r) + b * t.at(l, 1, r));
      }
      next[static_cast<std::size_t>(r)] = acc;
    }
    v = std::move(next);
  }
  const double f = std::norm(v[0]);
  return std::clamp(f, 0.0, 1.0);
}

PureState mps_to_dense(const MpsState& mps) {
  if (mps.n > kMaxMpsToDenseQubits) {
    throw_error(errc::too_large, "dense conversion limited to 20 qubits");
  }
  if (mps.n < 1) throw_error(errc::invalid_qubit_count, "empty matrix product state");

  // Grow the open-right-bond block row by row; qubit order is preserved.
  std::vector<cplx> block{cplx{1.0, 0.0}};  // (rows x right), right = 1 initially
  std::size_t rows = 1;
  int right = 1;
  for (const auto& t : mps.tensors) {
    std::vector<cplx> next(rows * 2 * static_cast<std::size_t>(t.right));
    for (std::size_t b = 0; b < rows; ++b) {
      for (int s = 0; s < 2; ++s) {
        for (int r = 0; r < t.right; ++r) {
          cplx acc{};
          for (int l = 0; l < t.left; ++l) {
            acc += block[b * static_cast<std::size_t>(right) + l] * t.at(l, s, r);
          }
          next[(b * 2 + s) * static_cast<std::size_t>(t.right) + r] = acc;
        }
      }
    }
    block = std::move(next);
    rows *= 2;
    right = t.right;
  }
  PureState state;
  state.n = mps.n;
  state.amplitudes = std::move(block);
  return state;
}

}  // namespace vdge
