#include "vdge.h"

#include <cstring>
#include <exception>
#include <string>
#include <variant>

#include "vdge/backend.hpp"
#include "vdge/cspsa.hpp"
#include "vdge/dense_state.hpp"
#include "vdge/error.hpp"
#include "vdge/mps_state.hpp"
#include "vdge/oracle.hpp"
#include "vdge/product_ansatz.hpp"
#include "vdge/state_io.hpp"
#include "vdge/stats.hpp"

struct vdge_state {
  std::variant<vdge::PureState, vdge::MpsState> value;
};

struct vdge_result {
  vdge::GmeEstimate estimate;
  int qubits = 0;
};

namespace {

thread_local std::string g_last_error;

vdge_status status_from_errc(vdge::errc code) {
  switch (code) {
    case vdge::errc::ok: return VDGE_OK;
    case vdge::errc::invalid_argument: return VDGE_ERR_INVALID_ARGUMENT;
    case vdge::errc::degenerate_pair: return VDGE_ERR_DEGENERATE_PAIR;
    case vdge::errc::invalid_qubit_count: return VDGE_ERR_INVALID_QUBIT_COUNT;
    case vdge::errc::out_of_range: return VDGE_ERR_OUT_OF_RANGE;
    case vdge::errc::dimension_mismatch: return VDGE_ERR_DIMENSION_MISMATCH;
    case vdge::errc::zero_norm: return VDGE_ERR_ZERO_NORM;
    case vdge::errc::too_large: return VDGE_ERR_TOO_LARGE;
    case vdge::errc::empty_input: return VDGE_ERR_EMPTY_INPUT;
    case vdge::errc::degenerate_run: return VDGE_ERR_DEGENERATE_RUN;
    case vdge::errc::io_error: return VDGE_ERR_IO;
    case vdge::errc::parse_error: return VDGE_ERR_PARSE;
  }
  return VDGE_ERR_RUNTIME;
}

template <typename Fn>
vdge_status guarded(Fn&& fn) {
  try {
    fn();
    return VDGE_OK;
  } catch (const vdge::Error& e) {
    g_last_error = e.what();
    return status_from_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VDGE_ERR_RUNTIME;
  } catch (...) {
    g_last_error = "unknown error";
    return VDGE_ERR_RUNTIME;
  }
}

vdge_status null_pointer() {
  g_last_error = "null pointer argument";
  return VDGE_ERR_NULL_POINTER;
}

vdge::ProductParams pairs_from_doubles(const double* pairs, int n) {
  vdge::ProductParams params;
  params.pairs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double* p = pairs + 4 * i;
    params.pairs[static_cast<std::size_t>(i)] = {{p[0], p[1]}, {p[2], p[3]}};
  }
  return params;
}

void pairs_to_doubles(const vdge::ProductParams& params, double* out) {
  for (int i = 0; i < params.num_qubits(); ++i) {
    const auto& p = params.pairs[static_cast<std::size_t>(i)];
    double* o = out + 4 * i;
    o[0] = p.alpha.real();
    o[1] = p.alpha.imag();
    o[2] = p.beta.real();
    o[3] = p.beta.imag();
  }
}

int state_qubits(const vdge_state& state) {
  return std::visit([](const auto& s) { return s.n; }, state.value);
}

}  // namespace

extern "C" {

const char* vdge_version(void) { return "0.1.0"; }

const char* vdge_last_error(void) { return g_last_error.c_str(); }

vdge_status vdge_state_ghz(int n, vdge_state** out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = new vdge_state{vdge::make_ghz(n)}; });
}

vdge_status vdge_state_w(int n, vdge_state** out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = new vdge_state{vdge::make_w(n)}; });
}

vdge_status vdge_state_gw(double s, double phi, vdge_state** out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = new vdge_state{vdge::make_gw(s, phi)}; });
}

vdge_status vdge_state_haar_random(int n, uint64_t seed, vdge_state** out) {
  if (!out) return null_pointer();
  return guarded([&] {
    vdge::Rng rng = vdge::make_rng(seed);
    *out = new vdge_state{vdge::haar_random_state(n, rng)};
  });
}

vdge_status vdge_state_from_amplitudes(int n, const double* amps, vdge_state** out) {
  if (!out || !amps) return null_pointer();
  return guarded([&] {
    if (n < 1) vdge::throw_error(vdge::errc::invalid_qubit_count, "qubit count must be at least 1");
    if (n > vdge::kMaxDenseQubits) {
      vdge::throw_error(vdge::errc::too_large, "dense backend limited to 26 qubits");
    }
    vdge::PureState state;
    state.n = n;
    const std::size_t dim = std::size_t{1} << n;
    state.amplitudes.resize(dim);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      state.amplitudes[i] = {amps[2 * i], amps[2 * i + 1]};
      norm2 += std::norm(state.amplitudes[i]);
    }
    const double norm = std::sqrt(norm2);
    if (std::abs(norm - 1.0) > 1e-6) {
      vdge::throw_error(vdge::errc::invalid_argument, "amplitudes norm off by more than 1e-6");
    }
    for (auto& z : state.amplitudes) z /= norm;
    *out = new vdge_state{std::move(state)};
  });
}

vdge_status vdge_state_product(int n, const double* pairs, vdge_state** out) {
  if (!out || !pairs) return null_pointer();
  return guarded([&] {
    *out = new vdge_state{vdge::params_to_dense_product(pairs_from_doubles(pairs, n))};
  });
}

vdge_status vdge_state_mps_ghz(int n, vdge_state** out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = new vdge_state{vdge::mps_ghz(n)}; });
}

vdge_status vdge_state_mps_w(int n, vdge_state** out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = new vdge_state{vdge::mps_w(n)}; });
}

vdge_status vdge_state_perturb_mps(const vdge_state* state, double lambda, uint64_t seed,
                                   vdge_state** out) {
  if (!state || !out) return null_pointer();
  return guarded([&] {
    const auto* mps = std::get_if<vdge::MpsState>(&state->value);
    if (!mps) vdge::throw_error(vdge::errc::invalid_argument, "perturbation requires an MPS state");
    vdge::Rng rng = vdge::make_rng(seed);
    *out = new vdge_state{vdge::perturb_mps(*mps, lambda, rng)};
  });
}

vdge_status vdge_state_mps_to_dense(const vdge_state* state, vdge_state** out) {
  if (!state || !out) return null_pointer();
  return guarded([&] {
    const auto* mps = std::get_if<vdge::MpsState>(&state->value);
    if (!mps) vdge::throw_error(vdge::errc::invalid_argument, "dense conversion requires an MPS state");
    *out = new vdge_state{vdge::mps_to_dense(*mps)};
  });
}

vdge_status vdge_state_read(const char* path, vdge_state** out) {
  if (!path || !out) return null_pointer();
  return guarded([&] {
    if (vdge::detect_state_kind(path) == vdge::StateKind::mps) {
      *out = new vdge_state{vdge::read_mps_state(path)};
    } else {
      *out = new vdge_state{vdge::read_dense_state(path)};
    }
  });
}

vdge_status vdge_state_write(const vdge_state* state, const char* path) {
  if (!state || !path) return null_pointer();
  return guarded([&] {
    if (const auto* mps = std::get_if<vdge::MpsState>(&state->value)) {
      vdge::write_mps_state(*mps, path);
    } else {
      vdge::write_dense_state(std::get<vdge::PureState>(state->value), path);
    }
  });
}

int vdge_state_qubits(const vdge_state* state) { return state ? state_qubits(*state) : -1; }

int vdge_state_is_mps(const vdge_state* state) {
  if (!state) return -1;
  return std::holds_alternative<vdge::MpsState>(state->value) ? 1 : 0;
}

vdge_status vdge_state_exact_fidelity(const vdge_state* state, const double* pairs, double* out) {
  if (!state || !pairs || !out) return null_pointer();
  return guarded([&] {
    const vdge::ProductParams params = pairs_from_doubles(pairs, state_qubits(*state));
    *out = std::visit([&](const auto& s) { return vdge::exact_fidelity(s, params); }, state->value);
  });
}

void vdge_state_free(vdge_state* state) { delete state; }

void vdge_run_options_init(vdge_run_options* options) {
  if (!options) return;
  std::memset(options, 0, sizeof(*options));
  options->shots = 8192;
  options->readout_flip = 0.0;
  options->gain_a = 3.0;
  options->gain_b = 0.1;
  options->gain_stability = 0.0;
  options->gain_s = 1.0;
  options->gain_t = 1.0 / 6.0;
  options->iterations = 150;
  options->repetitions = 5;
  options->seed = 0;
  options->init_pairs = nullptr;
  options->threads = 1;
}

vdge_status vdge_run(const vdge_state* state, const vdge_run_options* options, vdge_result** out) {
  if (!state || !options || !out) return null_pointer();
  return guarded([&] {
    vdge::ShotConfig shot_cfg{options->shots, options->readout_flip};
    vdge::CspsaConfig cspsa_cfg;
    cspsa_cfg.a = options->gain_a;
    cspsa_cfg.b = options->gain_b;
    cspsa_cfg.A = options->gain_stability;
    cspsa_cfg.s = options->gain_s;
    cspsa_cfg.t = options->gain_t;
    cspsa_cfg.iterations = options->iterations;
    cspsa_cfg.seed = options->seed;

    const int n = state_qubits(*state);
    std::optional<vdge::ProductParams> init;
    if (options->init_pairs) init = pairs_from_doubles(options->init_pairs, n);

    auto run = [&](const vdge::FidelityBackend& backend) {
      return vdge::run_vdge(backend, shot_cfg, cspsa_cfg, options->repetitions, init,
                            options->threads);
    };
    vdge::GmeEstimate estimate;
    if (const auto* mps = std::get_if<vdge::MpsState>(&state->value)) {
      estimate = run(vdge::MpsBackend(*mps));
    } else {
      estimate = run(vdge::DenseBackend(std::get<vdge::PureState>(state->value)));
    }
    *out = new vdge_result{std::move(estimate), n};
  });
}

double vdge_result_estimate(const vdge_result* result) { return result ? result->estimate.e_star : -1.0; }

double vdge_result_lambda2(const vdge_result* result) { return result ? result->estimate.lambda2 : -1.0; }

int64_t vdge_result_repetitions(const vdge_result* result) {
  return result ? result->estimate.repetitions : -1;
}

int64_t vdge_result_iterations(const vdge_result* result) {
  if (!result || result->estimate.traces.empty()) return -1;
  return static_cast<int64_t>(result->estimate.traces.front().records.size());
}

int64_t vdge_result_best_repetition(const vdge_result* result) {
  return result ? result->estimate.best_repetition : -1;
}

int64_t vdge_result_objective_evaluations(const vdge_result* result) {
  return result ? result->estimate.objective_evaluations : -1;
}

vdge_status vdge_result_estimates(const vdge_result* result, double* out) {
  if (!result || !out) return null_pointer();
  for (std::size_t j = 0; j < result->estimate.rep_estimates.size(); ++j) {
    out[j] = result->estimate.rep_estimates[j];
  }
  return VDGE_OK;
}

vdge_status vdge_result_final_fidelities(const vdge_result* result, double* out) {
  if (!result || !out) return null_pointer();
  for (std::size_t j = 0; j < result->estimate.traces.size(); ++j) {
    out[j] = result->estimate.traces[j].final_fidelity;
  }
  return VDGE_OK;
}

vdge_status vdge_result_trace(const vdge_result* result, int64_t repetition, double* f_plus,
                              double* f_minus) {
  if (!result) return null_pointer();
  if (repetition < 0 || repetition >= result->estimate.repetitions) {
    g_last_error = "repetition index out of range";
    return VDGE_ERR_OUT_OF_RANGE;
  }
  const auto& records = result->estimate.traces[static_cast<std::size_t>(repetition)].records;
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (f_plus) f_plus[k] = records[k].f_plus;
    if (f_minus) f_minus[k] = records[k].f_minus;
  }
  return VDGE_OK;
}

vdge_status vdge_result_trace_exact(const vdge_result* result, int64_t repetition, double* out) {
  if (!result || !out) return null_pointer();
  if (repetition < 0 || repetition >= result->estimate.repetitions) {
    g_last_error = "repetition index out of range";
    return VDGE_ERR_OUT_OF_RANGE;
  }
  const auto& exact =
      result->estimate.traces[static_cast<std::size_t>(repetition)].exact_fidelities;
  for (std::size_t k = 0; k < exact.size(); ++k) out[k] = exact[k];
  return VDGE_OK;
}

vdge_status vdge_result_final_pairs(const vdge_result* result, int64_t repetition, double* pairs) {
  if (!result || !pairs) return null_pointer();
  if (repetition < 0 || repetition >= result->estimate.repetitions) {
    g_last_error = "repetition index out of range";
    return VDGE_ERR_OUT_OF_RANGE;
  }
  pairs_to_doubles(result->estimate.traces[static_cast<std::size_t>(repetition)].final_params,
                   pairs);
  return VDGE_OK;
}

vdge_status vdge_result_iteration_estimates(const vdge_result* result, double* out) {
  if (!result || !out) return null_pointer();
  const std::vector<double> curve = vdge::per_iteration_estimates(result->estimate);
  for (std::size_t k = 0; k < curve.size(); ++k) out[k] = curve[k];
  return VDGE_OK;
}

void vdge_result_free(vdge_result* result) { delete result; }

void vdge_oracle_options_init(vdge_oracle_options* options) {
  if (!options) return;
  options->starts = 50;
  options->max_sweeps = 500;
  options->tol = 1e-12;
  options->seed = 0;
  options->threads = 1;
}

vdge_status vdge_oracle_gme(const vdge_state* state, const vdge_oracle_options* options, double* e,
                            double* lambda2, double* argmax_pairs) {
  if (!state || !options) return null_pointer();
  return guarded([&] {
    vdge::OracleConfig cfg;
    cfg.starts = options->starts;
    cfg.max_sweeps = options->max_sweeps;
    cfg.tol = options->tol;
    cfg.seed = options->seed;
    cfg.threads = options->threads;
    const vdge::OracleResult res = std::visit(
        [&](const auto& s) { return vdge::reference_gme(s, cfg); }, state->value);
    if (e) *e = res.e;
    if (lambda2) *lambda2 = res.lambda2;
    if (argmax_pairs) pairs_to_doubles(res.argmax, argmax_pairs);
  });
}

vdge_status vdge_schmidt_gme_2q(const vdge_state* state, double* e) {
  if (!state || !e) return null_pointer();
  return guarded([&] {
    const auto* dense = std::get_if<vdge::PureState>(&state->value);
    if (!dense) {
      vdge::throw_error(vdge::errc::invalid_argument, "Schmidt cross-check requires a dense state");
    }
    *e = vdge::schmidt_gme_2q(*dense);
  });
}

vdge_status vdge_summarize(const double* values, int64_t count, double* median, double* q1,
                           double* q3) {
  if (!values) return null_pointer();
  return guarded([&] {
    if (count < 1) vdge::throw_error(vdge::errc::empty_input, "summarize requires at least one value");
    const vdge::SummaryStats stats =
        vdge::summarize(std::span<const double>(values, static_cast<std::size_t>(count)));
    if (median) *median = stats.median;
    if (q1) *q1 = stats.q1;
    if (q3) *q3 = stats.q3;
  });
}

vdge_status vdge_bootstrap_median(const double* values, int64_t count, int64_t resamples,
                                  double confidence, uint64_t seed, double* lo, double* hi) {
  if (!values) return null_pointer();
  return guarded([&] {
    if (count < 1) vdge::throw_error(vdge::errc::empty_input, "bootstrap requires at least one value");
    vdge::Rng rng = vdge::make_rng(seed);
    const vdge::Interval interval = vdge::bootstrap(
        std::span<const double>(values, static_cast<std::size_t>(count)),
        [](std::span<const double> v) { return vdge::summarize(v).median; }, resamples, confidence,
        rng);
    if (lo) *lo = interval.lo;
    if (hi) *hi = interval.hi;
  });
}

} /* extern "C" */
