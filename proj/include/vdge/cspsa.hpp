#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vdge/backend.hpp"
#include "vdge/product_ansatz.hpp"
#include "vdge/shot_sampler.hpp"

namespace vdge {

// Gain schedule constants for the complex SPSA iteration. The defaults are
// the standard choices from the CSPSA literature; every field is
// configurable.
struct CspsaConfig {
  double a = 3.0;        // gain numerator
  double b = 0.1;        // perturbation numerator
  double A = 0.0;        // stability offset
  double s = 1.0;        // gain exponent
  double t = 1.0 / 6.0;  // perturbation exponent
  std::int64_t iterations = 150;
  std::uint64_t seed = 0;  // master seed; repetition j uses stream j
};

struct GainSchedule {
  double a_k;
  double c_k;
};

// a_k = a/(k+1+A)^s, c_k = b/(k+1)^t, k >= 0.
GainSchedule gains(std::int64_t k, const CspsaConfig& cfg);

// Simultaneous perturbation direction: each component uniform on
// {+1, -1, +i, -i}, all unit modulus.
std::vector<cplx> perturbation(int dim, Rng& rng);

struct TraceRecord {
  std::int64_t k;
  double f_plus;
  double f_minus;
};

using FlatObjective = std::function<double(std::span<const cplx>)>;

struct StepOutcome {
  std::vector<cplx> theta;
  TraceRecord record;
};

// One ascent step: theta_{k,±} = theta_k ± c_k Δ, gradient estimate
// g_i = (F+ - F-)/(2 c_k conj(Δ_i)), theta_{k+1} = theta_k + a_k g.
// Exactly two objective evaluations. If a perturbed or updated point
// contains a degenerate pair, Δ is redrawn (at most 10 times, then
// degenerate_run).
StepOutcome cspsa_step(std::span<const cplx> theta, std::int64_t k, const CspsaConfig& cfg,
                       const FlatObjective& objective, Rng& rng);

// One optimization repetition: per-iteration sampled fidelities at the
// perturbed points, plus the final sampled fidelity at theta_K. The exact
// fidelities of the iterates are kept as a free simulation diagnostic; they
// never enter the estimate and are not counted as objective evaluations.
struct RunTrace {
  std::vector<TraceRecord> records;
  std::vector<double> exact_fidelities;  // K+1 entries: theta_0 .. theta_K
  ProductParams final_params;
  double final_fidelity = 0.0;  // sampled, not exact
  double estimate = 1.0;        // 1 - final_fidelity
};

// Multi-start result. The selected estimate comes from the repetition whose
// final sampled fidelity is largest, i.e. the smallest of the Ê_j (ties go
// to the lowest repetition index).
struct GmeEstimate {
  std::vector<double> rep_estimates;
  std::vector<RunTrace> traces;
  std::int64_t repetitions = 0;
  std::int64_t best_repetition = 0;
  double e_star = 1.0;
  double lambda2 = 0.0;
  std::int64_t objective_evaluations = 0;  // 2*K*R + R when no step was retried
};

// Full VDGE driver: `repetitions` independent CSPSA maximizations of the
// sampled fidelity, Haar-random initialization per repetition unless an
// explicit start is given. Repetition j draws from the stream derived from
// (cfg.seed, j), so results are reproducible for any thread count.
// The iterate is renormalized to unit pairs after every step; the sampled
// objective is constant on rays, so this only fixes the coordinate scale
// that the gain defaults are tuned for.
GmeEstimate run_vdge(const FidelityBackend& backend, const ShotConfig& shot_cfg,
                     const CspsaConfig& cspsa_cfg, std::int64_t repetitions,
                     const std::optional<ProductParams>& init = std::nullopt, int threads = 1);

// Diagnostic estimate as a function of the iteration, for convergence
// curves: at each k the best exact fidelity across repetitions,
// E_k = 1 - max_j F(theta_{j,k}), K+1 entries with entry 0 the
// initialization. Built from the stored diagnostics, no extra
// measurements.
std::vector<double> per_iteration_estimates(const GmeEstimate& estimate);

}  // namespace vdge
