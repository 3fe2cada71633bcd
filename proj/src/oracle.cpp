#include "vdge/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "vdge/error.hpp"
#include "vdge/parallel.hpp"

namespace vdge {

namespace {

constexpr double kZeroEnvironment = 1e-300;

// Optimal unnormalized pair for qubit i: the contraction of psi against
// every other qubit's conjugated pair, leaving qubit i's physical leg free.
QubitPair dense_environment(const PureState& state, const ProductParams& params, int i) {
  std::vector<cplx> v = state.amplitudes;
  // Qubits above i, most significant first.
  for (int j = 0; j < i; ++j) {
    const auto& p = params.pairs[static_cast<std::size_t>(j)];
    const cplx a = std::conj(p.alpha);
    const cplx b = std::conj(p.beta);
    const std::size_t half = v.size() / 2;
    for (std::size_t x = 0; x < half; ++x) v[x] = a * v[x] + b * v[half + x];
    v.resize(half);
  }
  // Qubits below i, least significant first.
  for (int j = state.n - 1; j > i; --j) {
    const auto& p = params.pairs[static_cast<std::size_t>(j)];
    const cplx a = std::conj(p.alpha);
    const cplx b = std::conj(p.beta);
    const std::size_t half = v.size() / 2;
    for (std::size_t x = 0; x < half; ++x) v[x] = a * v[2 * x] + b * v[2 * x + 1];
    v.resize(half);
  }
  return {v[0], v[1]};
}

QubitPair haar_pair(Rng& rng) {
  return normalize_pair({standard_complex_gaussian(rng), standard_complex_gaussian(rng)});
}

// Plain rescale to unit norm. Environments can be far below the optimizer's
// degeneracy epsilon while still carrying a meaningful direction (their
// norm is a product of n-1 per-site overlaps), so normalize_pair's
// threshold does not apply; callers guard the true-zero case themselves.
QubitPair unit_pair(const QubitPair& p) {
  const double inv = 1.0 / std::sqrt(pair_norm2(p));
  return {p.alpha * inv, p.beta * inv};
}

ProductParams normalized_copy(const ProductParams& params) {
  ProductParams out;
  out.pairs.reserve(params.pairs.size());
  for (const auto& p : params.pairs) out.pairs.push_back(normalize_pair(p));
  return out;
}

template <typename State>
OracleResult reference_gme_impl(const State& state, int n, const OracleConfig& cfg) {
  if (cfg.starts < 1) throw_error(errc::invalid_argument, "starts must be at least 1");
  if (cfg.max_sweeps < 1) throw_error(errc::invalid_argument, "max_sweeps must be at least 1");
  if (!(cfg.tol > 0.0)) throw_error(errc::invalid_argument, "tol must be positive");

  struct StartResult {
    double fidelity = -1.0;
    ProductParams params;
  };
  std::vector<StartResult> results(static_cast<std::size_t>(cfg.starts));

  parallel_for(cfg.starts, cfg.threads, [&](std::int64_t start) {
    Rng rng = derive_rng(cfg.seed, static_cast<std::uint64_t>(start));
    ProductParams params = haar_random_params(n, rng);
    double prev = -1.0;
    double fidelity = 0.0;
    for (std::int64_t sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
      SweepResult res = alternating_sweep(state, params, rng);
      params = std::move(res.params);
      fidelity = res.fidelity;
      if (std::abs(fidelity - prev) < cfg.tol) break;
      prev = fidelity;
    }
    results[static_cast<std::size_t>(start)] = {fidelity, std::move(params)};
  });

  std::size_t best = 0;
  for (std::size_t s = 1; s < results.size(); ++s) {
    if (results[s].fidelity > results[best].fidelity) best = s;
  }
  OracleResult out;
  out.lambda2 = std::clamp(results[best].fidelity, 0.0, 1.0);
  out.e = 1.0 - out.lambda2;
  out.argmax = std::move(results[best].params);
  out.best_start = static_cast<std::int64_t>(best);
  return out;
}

}  // namespace

SweepResult alternating_sweep(const PureState& state, const ProductParams& params, Rng& rng) {
  if (params.num_qubits() != state.n) {
    throw_error(errc::dimension_mismatch, "parameter count does not match qubit count");
  }
  ProductParams current = normalized_copy(params);
  for (int i = 0; i < state.n; ++i) {
    const QubitPair env = dense_environment(state, current, i);
    if (pair_norm2(env) <= kZeroEnvironment) {
      current.pairs[static_cast<std::size_t>(i)] = haar_pair(rng);
      continue;
    }
    current.pairs[static_cast<std::size_t>(i)] = unit_pair(env);
  }
  const double fidelity = exact_fidelity(state, current);
  return {std::move(current), fidelity};
}

SweepResult alternating_sweep(const MpsState& state, const ProductParams& params, Rng& rng) {
  if (params.num_qubits() != state.n) {
    throw_error(errc::dimension_mismatch, "parameter count does not match qubit count");
  }
  const int n = state.n;
  ProductParams current = normalized_copy(params);

  // Suffix contractions with the pre-sweep pairs: suffix[j] has the left
  // bond dimension of site j; suffix[n] is the scalar 1.
  std::vector<std::vector<cplx>> suffix(static_cast<std::size_t>(n) + 1);
  suffix[static_cast<std::size_t>(n)] = {cplx{1.0, 0.0}};
  for (int j = n - 1; j >= 0; --j) {
    const MpsTensor& t = state.tensors[static_cast<std::size_t>(j)];
    const auto& p = current.pairs[static_cast<std::size_t>(j)];
    const cplx a = std::conj(p.alpha);
    const cplx b = std::conj(p.beta);
    const auto& right = suffix[static_cast<std::size_t>(j) + 1];
    std::vector<cplx> col(static_cast<std::size_t>(t.left));
    for (int l = 0; l < t.left; ++l) {
      cplx acc{};
      for (int r = 0; r < t.right; ++r) {
        acc += (a * t.at(l, 0, r) + b * t.at(l, 1, r)) * right[static_cast<std::size_t>(r)];
      }
      col[static_cast<std::size_t>(l)] = acc;
    }
    suffix[static_cast<std::size_t>(j)] = std::move(col);
  }

  // Left-to-right pass with already-updated pairs on the left.
  std::vector<cplx> prefix{cplx{1.0, 0.0}};
  for (int i = 0; i < n; ++i) {
    const MpsTensor& t = state.tensors[static_cast<std::size_t>(i)];
    const auto& right = suffix[static_cast<std::size_t>(i) + 1];
    QubitPair env{};
    for (int s = 0; s < 2; ++s) {
      cplx acc{};
      for (int l = 0; l < t.left; ++l) {
        for (int r = 0; r < t.right; ++r) {
          acc += prefix[static_cast<std::size_t>(l)] * t.at(l, s, r) *
                 right[static_cast<std::size_t>(r)];
        }
      }
      (s == 0 ? env.alpha : env.beta) = acc;
    }
    QubitPair updated;
    if (pair_norm2(env) <= kZeroEnvironment) {
      updated = haar_pair(rng);
    } else {
      updated = unit_pair(env);
    }
    current.pairs[static_cast<std::size_t>(i)] = updated;

    const cplx a = std::conj(updated.alpha);
    const cplx b = std::conj(updated.beta);
    std::vector<cplx> next(static_cast<std::size_t>(t.right));
    for (int r = 0; r < t.right; ++r) {
      cplx acc{};
      for (int l = 0; l < t.left; ++l) {
        acc += prefix[static_cast<std::size_t>(l)] * (a * t.at(l, 0, r) + b * t.at(l, 1, r));
      }
      next[static_cast<std::size_t>(r)] = acc;
    }
    prefix = std::move(next);
  }
  const double fidelity = exact_fidelity(state, current);
  return {std::move(current), fidelity};
}

OracleResult reference_gme(const PureState& state, const OracleConfig& cfg) {
  return reference_gme_impl(state, state.n, cfg);
}

OracleResult reference_gme(const MpsState& state, const OracleConfig& cfg) {
  return reference_gme_impl(state, state.n, cfg);
}

double schmidt_gme_2q(const PureState& state) {
  if (state.n != 2) throw_error(errc::dimension_mismatch, "Schmidt cross-check requires 2 qubits");
  const cplx a0 = state.amplitudes[0];
  const cplx a1 = state.amplitudes[1];
  const cplx a2 = state.amplitudes[2];
  const cplx a3 = state.amplitudes[3];
  // Gram matrix of the 2x2 coefficient matrix [[a0, a1], [a2, a3]].
  const double g00 = std::norm(a0) + std::norm(a2);
  const double g11 = std::norm(a1) + std::norm(a3);
  const cplx g01 = std::conj(a0) * a1 + std::conj(a2) * a3;
  const double mean = 0.5 * (g00 + g11);
  const double disc = std::sqrt(0.25 * (g00 - g11) * (g00 - g11) + std::norm(g01));
  const double lambda2 = std::clamp(mean + disc, 0.0, 1.0);
  return 1.0 - lambda2;
}

}  // namespace vdge
