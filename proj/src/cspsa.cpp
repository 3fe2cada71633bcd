#include "vdge/cspsa.hpp"

#include <algorithm>
#include <cmath>

#include "vdge/error.hpp"
#include "vdge/parallel.hpp"

namespace vdge {

namespace {

constexpr int kMaxStepRetries = 10;

bool flat_pairs_valid(std::span<const cplx> theta) {
  for (std::size_t i = 0; i + 1 < theta.size(); i += 2) {
    if (!(std::norm(theta[i]) + std::norm(theta[i + 1]) > kEpsilonNorm)) return false;
  }
  return true;
}

// Maps the iterate back to unit-norm pairs. The objective is constant on
// rays, so this changes nothing physical; it pins the coordinate scale the
// gain schedule is tuned for. Left free, the pair norms random-walk and the
// effective step size collapses.
void renormalize_flat_pairs(std::vector<cplx>& theta) {
  for (std::size_t i = 0; i + 1 < theta.size(); i += 2) {
    const double norm = std::sqrt(std::norm(theta[i]) + std::norm(theta[i + 1]));
    theta[i] /= norm;
    theta[i + 1] /= norm;
  }
}

}  // namespace

GainSchedule gains(std::int64_t k, const CspsaConfig& cfg) {
  if (k < 0) throw_error(errc::invalid_argument, "iteration index must be >= 0");
  const double kk = static_cast<double>(k);
  return {cfg.a / std::pow(kk + 1.0 + cfg.A, cfg.s), cfg.b / std::pow(kk + 1.0, cfg.t)};
}

std::vector<cplx> perturbation(int dim, Rng& rng) {
  if (dim < 1) throw_error(errc::invalid_argument, "perturbation dimension must be >= 1");
  static constexpr cplx symbols[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<cplx> delta(static_cast<std::size_t>(dim));
  for (auto& d : delta) d = symbols[pick(rng)];
  return delta;
}

StepOutcome cspsa_step(std::span<const cplx> theta, std::int64_t k, const CspsaConfig& cfg,
                       const FlatObjective& objective, Rng& rng) {
  const auto [a_k, c_k] = gains(k, cfg);
  const std::size_t dim = theta.size();
  std::vector<cplx> plus(dim), minus(dim), next(dim);
  for (int attempt = 0; attempt < kMaxStepRetries; ++attempt) {
    const std::vector<cplx> delta = perturbation(static_cast<int>(dim), rng);
    for (std::size_t i = 0; i < dim; ++i) {
      plus[i] = theta[i] + c_k * delta[i];
      minus[i] = theta[i] - c_k * delta[i];
    }
    // Degeneracy checks cost no objective evaluations.
    if (!flat_pairs_valid(plus) || !flat_pairs_valid(minus)) continue;
    const double f_plus = objective(plus);
    const double f_minus = objective(minus);
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx grad = (f_plus - f_minus) / (2.0 * c_k * std::conj(delta[i]));
      next[i] = theta[i] + a_k * grad;
    }
    if (!flat_pairs_valid(next)) continue;
    return {next, {k, f_plus, f_minus}};
  }
  throw_error(errc::degenerate_run, "step produced degenerate pairs 10 times in a row");
}

GmeEstimate run_vdge(const FidelityBackend& backend, const ShotConfig& shot_cfg,
                     const CspsaConfig& cspsa_cfg, std::int64_t repetitions,
                     const std::optional<ProductParams>& init, int threads) {
  const int n = backend.num_qubits();
  if (repetitions < 1) throw_error(errc::invalid_argument, "repetitions must be at least 1");
  if (cspsa_cfg.iterations < 1) throw_error(errc::invalid_argument, "iterations must be at least 1");
  if (init && init->num_qubits() != n) {
    throw_error(errc::dimension_mismatch, "initial parameters do not match backend qubit count");
  }
  if (init && !init->all_valid()) {
    throw_error(errc::degenerate_pair, "initial parameters contain a degenerate pair");
  }

  GmeEstimate result;
  result.repetitions = repetitions;
  result.traces.resize(static_cast<std::size_t>(repetitions));
  result.rep_estimates.resize(static_cast<std::size_t>(repetitions));
  std::vector<std::int64_t> eval_counts(static_cast<std::size_t>(repetitions), 0);

  parallel_for(repetitions, threads, [&](std::int64_t rep) {
    Rng rng = derive_rng(cspsa_cfg.seed, static_cast<std::uint64_t>(rep));
    std::vector<cplx> theta =
        init ? flatten_params(*init) : flatten_params(haar_random_params(n, rng));
    renormalize_flat_pairs(theta);

    std::int64_t& evals = eval_counts[static_cast<std::size_t>(rep)];
    FlatObjective objective = [&](std::span<const cplx> flat) {
      const double f = backend.exact_fidelity(unflatten_params(flat));
      ++evals;
      return sample_fidelity(f, shot_cfg, n, rng);
    };
    const auto diagnostic = [&](const std::vector<cplx>& flat) {
      return backend.exact_fidelity(unflatten_params(flat));
    };

    RunTrace trace;
    trace.records.reserve(static_cast<std::size_t>(cspsa_cfg.iterations));
    trace.exact_fidelities.reserve(static_cast<std::size_t>(cspsa_cfg.iterations) + 1);
    trace.exact_fidelities.push_back(diagnostic(theta));
    for (std::int64_t k = 0; k < cspsa_cfg.iterations; ++k) {
      StepOutcome out = cspsa_step(theta, k, cspsa_cfg, objective, rng);
      theta = std::move(out.theta);
      renormalize_flat_pairs(theta);
      trace.records.push_back(out.record);
      trace.exact_fidelities.push_back(diagnostic(theta));
    }
    trace.final_fidelity = objective(theta);
    trace.estimate = 1.0 - trace.final_fidelity;
    trace.final_params = unflatten_params(theta);
    result.rep_estimates[static_cast<std::size_t>(rep)] = trace.estimate;
    result.traces[static_cast<std::size_t>(rep)] = std::move(trace);
  });

  std::int64_t best = 0;
  for (std::int64_t rep = 1; rep < repetitions; ++rep) {
    if (result.traces[static_cast<std::size_t>(rep)].final_fidelity >
        result.traces[static_cast<std::size_t>(best)].final_fidelity) {
      best = rep;
    }
  }
  result.best_repetition = best;
  result.e_star = result.traces[static_cast<std::size_t>(best)].estimate;
  result.lambda2 = 1.0 - result.e_star;
  result.objective_evaluations = 0;
  for (const auto c : eval_counts) result.objective_evaluations += c;
  return result;
}

std::vector<double> per_iteration_estimates(const GmeEstimate& estimate) {
  if (estimate.traces.empty()) return {};
  const std::size_t points = estimate.traces.front().exact_fidelities.size();
  std::vector<double> out(points, 1.0);
  for (const auto& trace : estimate.traces) {
    for (std::size_t k = 0; k < points; ++k) {
      out[k] = std::min(out[k], 1.0 - trace.exact_fidelities[k]);
    }
  }
  return out;
}

}  // namespace vdge
