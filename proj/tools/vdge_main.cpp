// vdge: command-line harness for geometric-entanglement estimation.
//
// Subcommands: estimate, gw-sweep, random-bench, mps-bench. All numerical
// work goes through the shared-library C API (vdge.h); this file only
// parses options, schedules tasks and formats CSV/JSON output.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vdge.h"

namespace {

using nlohmann::json;

constexpr const char* kCsvVersion = "vdge-csv v1";

// Exit codes: 0 success, 1 runtime failure, 2 input error.
struct CliFailure : std::runtime_error {
  int code;
  CliFailure(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] void fail(int code, const std::string& msg) { throw CliFailure(code, msg); }

void check_status(vdge_status status, int code_on_error) {
  if (status != VDGE_OK) fail(code_on_error, vdge_last_error());
}

struct StateHandle {
  vdge_state* ptr = nullptr;
  StateHandle() = default;
  explicit StateHandle(vdge_state* p) : ptr(p) {}
  StateHandle(StateHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  StateHandle& operator=(StateHandle&& other) noexcept {
    std::swap(ptr, other.ptr);
    return *this;
  }
  StateHandle(const StateHandle&) = delete;
  StateHandle& operator=(const StateHandle&) = delete;
  ~StateHandle() { vdge_state_free(ptr); }
};

struct ResultHandle {
  vdge_result* ptr = nullptr;
  ResultHandle() = default;
  ResultHandle(ResultHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  ResultHandle& operator=(ResultHandle&& other) noexcept {
    std::swap(ptr, other.ptr);
    return *this;
  }
  ResultHandle(const ResultHandle&) = delete;
  ResultHandle& operator=(const ResultHandle&) = delete;
  ~ResultHandle() { vdge_result_free(ptr); }
};

// splitmix64-style mixing for per-task seeds derived from the master seed.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t sub = 0) {
  std::uint64_t x = master ^ (0x9E3779B97F4A7C15ULL + tag * 0xBF58476D1CE4E5B9ULL +
                              sub * 0x94D049BB133111EBULL);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Deterministic task fan-out: results are written into index-addressed
// slots, so the thread count never changes any output.
void run_tasks(std::int64_t count, int threads, const std::function<void(std::int64_t)>& body) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  if (static_cast<std::int64_t>(threads) > count) threads = static_cast<int>(count);
  if (threads <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct RunOpts {
  std::int64_t shots = 8192;
  double readout_flip = 0.0;
  double gain_a = 3.0;
  double gain_b = 0.1;
  double gain_stability = 0.0;
  double gain_s = 1.0;
  double gain_t = 1.0 / 6.0;
  std::int64_t iterations = 150;
  std::int64_t repetitions = 5;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--shots,-N", shots, "Shots per fidelity estimate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--readout-flip", readout_flip, "Per-qubit readout bit-flip probability")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 0.5));
    cmd->add_option("--iterations,-k", iterations, "CSPSA iterations per repetition")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--reps,-r", repetitions, "Multi-start repetitions")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--gain-a", gain_a, "CSPSA gain numerator")->capture_default_str();
    cmd->add_option("--gain-b", gain_b, "CSPSA perturbation numerator")->capture_default_str();
    cmd->add_option("--gain-A", gain_stability, "CSPSA stability offset")->capture_default_str();
    cmd->add_option("--gain-s", gain_s, "CSPSA gain exponent")->capture_default_str();
    cmd->add_option("--gain-t", gain_t, "CSPSA perturbation exponent")->capture_default_str();
  }

  vdge_run_options to_c(std::uint64_t seed, int threads, const double* init_pairs) const {
    vdge_run_options opts;
    vdge_run_options_init(&opts);
    opts.shots = shots;
    opts.readout_flip = readout_flip;
    opts.gain_a = gain_a;
    opts.gain_b = gain_b;
    opts.gain_stability = gain_stability;
    opts.gain_s = gain_s;
    opts.gain_t = gain_t;
    opts.iterations = iterations;
    opts.repetitions = repetitions;
    opts.seed = seed;
    opts.threads = threads;
    opts.init_pairs = init_pairs;
    return opts;
  }

  json echo() const {
    return json{{"shots", shots},
                {"readout_flip", readout_flip},
                {"gain_a", gain_a},
                {"gain_b", gain_b},
                {"gain_A", gain_stability},
                {"gain_s", gain_s},
                {"gain_t", gain_t},
                {"iterations", iterations},
                {"repetitions", repetitions}};
  }
};

struct OracleOpts {
  std::int64_t starts = 50;
  std::int64_t max_sweeps = 500;
  double tol = 1e-12;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--oracle-starts", starts, "Oracle multi-start count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--oracle-sweeps", max_sweeps, "Oracle sweep cap per start")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--oracle-tol", tol, "Oracle convergence tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }

  vdge_oracle_options to_c(std::uint64_t seed, int threads) const {
    vdge_oracle_options opts;
    vdge_oracle_options_init(&opts);
    opts.starts = starts;
    opts.max_sweeps = max_sweeps;
    opts.tol = tol;
    opts.seed = seed;
    opts.threads = threads;
    return opts;
  }

  json echo() const {
    return json{{"starts", starts}, {"max_sweeps", max_sweeps}, {"tol", tol}};
  }
};

double oracle_e(const vdge_state* state, const OracleOpts& opts, std::uint64_t seed, int threads,
                std::vector<double>* argmax_pairs = nullptr) {
  const vdge_oracle_options cfg = opts.to_c(seed, threads);
  double e = 0.0, lambda2 = 0.0;
  double* argmax = nullptr;
  if (argmax_pairs) {
    argmax_pairs->assign(4 * static_cast<std::size_t>(vdge_state_qubits(state)), 0.0);
    argmax = argmax_pairs->data();
  }
  check_status(vdge_oracle_gme(state, &cfg, &e, &lambda2, argmax), 1);
  return e;
}

struct Quartiles {
  double median, q1, q3;
};

Quartiles quartiles(const std::vector<double>& values) {
  Quartiles q{};
  check_status(vdge_summarize(values.data(), static_cast<std::int64_t>(values.size()), &q.median,
                              &q.q1, &q.q3),
               1);
  return q;
}

class Output {
public:
  explicit Output(const std::string& path) : path_(path) {
    if (path_ != "-") {
      file_.open(path_);
      if (!file_) fail(1, "cannot open '" + path_ + "' for writing");
    }
  }
  std::ostream& stream() { return path_ == "-" ? std::cout : file_; }
  void finish() {
    stream().flush();
    if (path_ != "-" && !file_) fail(1, "failed writing '" + path_ + "'");
  }

private:
  std::string path_;
  std::ofstream file_;
};

void write_csv_header(std::ostream& out, const std::string& command, const json& config,
                      const std::string& columns) {
  out << "# " << kCsvVersion << ' ' << command << '\n';
  out << "# config " << config.dump() << '\n';
  out << columns << '\n';
}

std::string format_double(double v) {
  std::ostringstream ss;
  ss.precision(12);
  ss << v;
  return ss.str();
}

// ---- estimate ----------------------------------------------------------

struct EstimateArgs {
  std::string input;
  std::string backend = "auto";
  std::string output = "-";
  RunOpts run;
  OracleOpts oracle;
  std::uint64_t seed = 0;
  int threads = 0;
};

int cmd_estimate(const EstimateArgs& args) {
  StateHandle state;
  check_status(vdge_state_read(args.input.c_str(), &state.ptr), 2);

  if (args.backend == "dense" && vdge_state_is_mps(state.ptr) == 1) {
    StateHandle dense;
    check_status(vdge_state_mps_to_dense(state.ptr, &dense.ptr), 2);
    state = std::move(dense);
  } else if (args.backend == "mps" && vdge_state_is_mps(state.ptr) == 0) {
    fail(2, "field 'amplitudes': dense state files cannot run on the mps backend");
  }
  const bool is_mps = vdge_state_is_mps(state.ptr) == 1;
  const int n = vdge_state_qubits(state.ptr);

  const double e_ref = oracle_e(state.ptr, args.oracle, mix_seed(args.seed, 0xA), args.threads);

  const vdge_run_options opts = args.run.to_c(args.seed, args.threads, nullptr);
  ResultHandle result;
  check_status(vdge_run(state.ptr, &opts, &result.ptr), 1);

  const std::int64_t reps = vdge_result_repetitions(result.ptr);
  const std::int64_t iters = vdge_result_iterations(result.ptr);
  std::vector<double> estimates(reps), fidelities(reps);
  check_status(vdge_result_estimates(result.ptr, estimates.data()), 1);
  check_status(vdge_result_final_fidelities(result.ptr, fidelities.data()), 1);
  std::vector<double> curve(iters + 1);
  check_status(vdge_result_iteration_estimates(result.ptr, curve.data()), 1);

  json traces = json::array();
  std::vector<double> f_plus(iters), f_minus(iters), f_exact(iters + 1);
  for (std::int64_t j = 0; j < reps; ++j) {
    check_status(vdge_result_trace(result.ptr, j, f_plus.data(), f_minus.data()), 1);
    check_status(vdge_result_trace_exact(result.ptr, j, f_exact.data()), 1);
    traces.push_back(json{{"f_plus", f_plus}, {"f_minus", f_minus}, {"f_exact", f_exact}});
  }

  const double e_star = vdge_result_estimate(result.ptr);
  json doc{
      {"schema", "vdge-estimate-v1"},
      {"config",
       {{"command", "estimate"},
        {"input", args.input},
        {"backend", is_mps ? "mps" : "dense"},
        {"qubits", n},
        {"seed", args.seed},
        {"vdge", args.run.echo()},
        {"oracle", args.oracle.echo()}}},
      {"oracle", {{"e", e_ref}, {"lambda2", 1.0 - e_ref}}},
      {"vdge",
       {{"e_star", e_star},
        {"lambda2", vdge_result_lambda2(result.ptr)},
        {"best_repetition", vdge_result_best_repetition(result.ptr)},
        {"objective_evaluations", vdge_result_objective_evaluations(result.ptr)},
        {"rep_estimates", estimates},
        {"final_fidelities", fidelities},
        {"iteration_estimates", curve},
        {"traces", traces}}},
      {"abs_error", std::abs(e_star - e_ref)}};

  Output out(args.output);
  out.stream() << doc.dump(2) << '\n';
  out.finish();
  return 0;
}

// ---- gw-sweep ----------------------------------------------------------

struct GwSweepArgs {
  std::vector<double> phis{0.0, M_PI / 4.0, M_PI / 2.0, M_PI};
  int s_count = 31;
  int samples = 1;
  std::string output = "-";
  RunOpts run;
  OracleOpts oracle;
  std::uint64_t seed = 0;
  int threads = 0;
};

int cmd_gw_sweep(const GwSweepArgs& args) {
  struct Row {
    double phi, s, e_oracle, median, q1, q3;
  };
  const std::int64_t count = static_cast<std::int64_t>(args.phis.size()) * args.s_count;
  std::vector<Row> rows(count);

  run_tasks(count, args.threads, [&](std::int64_t idx) {
    const std::size_t phi_idx = static_cast<std::size_t>(idx) / args.s_count;
    const int s_idx = static_cast<int>(idx % args.s_count);
    const double phi = args.phis[phi_idx];
    const double s = (args.s_count == 1) ? 0.0 : static_cast<double>(s_idx) / (args.s_count - 1);

    StateHandle state;
    check_status(vdge_state_gw(s, phi, &state.ptr), 1);
    const double e_ref = oracle_e(state.ptr, args.oracle, mix_seed(args.seed, idx, 1), 1);

    std::vector<double> sampled(static_cast<std::size_t>(args.samples));
    for (int m = 0; m < args.samples; ++m) {
      const vdge_run_options opts =
          args.run.to_c(mix_seed(args.seed, idx, 2 + static_cast<std::uint64_t>(m)), 1, nullptr);
      ResultHandle result;
      check_status(vdge_run(state.ptr, &opts, &result.ptr), 1);
      sampled[static_cast<std::size_t>(m)] = vdge_result_estimate(result.ptr);
    }
    const Quartiles q = quartiles(sampled);
    rows[static_cast<std::size_t>(idx)] = {phi, s, e_ref, q.median, q.q1, q.q3};
  });

  json config{{"command", "gw-sweep"}, {"phi", args.phis},          {"s_count", args.s_count},
              {"samples", args.samples}, {"seed", args.seed},       {"vdge", args.run.echo()},
              {"oracle", args.oracle.echo()}};
  Output out(args.output);
  write_csv_header(out.stream(), "gw-sweep", config,
                   "phi,s,E_oracle,E_vdge_median,E_vdge_q1,E_vdge_q3,reps,iters,shots,seed");
  for (const Row& r : rows) {
    out.stream() << format_double(r.phi) << ',' << format_double(r.s) << ','
                 << format_double(r.e_oracle) << ',' << format_double(r.median) << ','
                 << format_double(r.q1) << ',' << format_double(r.q3) << ','
                 << args.run.repetitions << ',' << args.run.iterations << ',' << args.run.shots
                 << ',' << args.seed << '\n';
  }
  out.finish();
  return 0;
}

// ---- random-bench ------------------------------------------------------

struct RandomBenchArgs {
  std::vector<int> qubit_counts{3, 4, 5, 6};
  int states = 20;
  std::string output = "-";
  RunOpts run;
  OracleOpts oracle;
  std::uint64_t seed = 0;
  int threads = 0;

  RandomBenchArgs() { run.repetitions = 20; }
};

int cmd_random_bench(const RandomBenchArgs& args) {
  const std::int64_t count = static_cast<std::int64_t>(args.qubit_counts.size()) * args.states;
  const std::size_t iters = static_cast<std::size_t>(args.run.iterations);
  // err_curves[task] = |E_k - E_oracle| for k = 0..K-1.
  std::vector<std::vector<double>> err_curves(static_cast<std::size_t>(count));

  run_tasks(count, args.threads, [&](std::int64_t idx) {
    const std::size_t n_idx = static_cast<std::size_t>(idx) / args.states;
    const int n = args.qubit_counts[n_idx];

    StateHandle state;
    check_status(vdge_state_haar_random(n, mix_seed(args.seed, idx, 1), &state.ptr), 1);
    const double e_ref = oracle_e(state.ptr, args.oracle, mix_seed(args.seed, idx, 2), 1);

    const vdge_run_options opts = args.run.to_c(mix_seed(args.seed, idx, 3), 1, nullptr);
    ResultHandle result;
    check_status(vdge_run(state.ptr, &opts, &result.ptr), 1);
    std::vector<double> curve(iters + 1);
    check_status(vdge_result_iteration_estimates(result.ptr, curve.data()), 1);
    // Rows cover k = 1..K; the k = 0 entry is the random initialization.
    std::vector<double> errs(iters);
    for (std::size_t k = 0; k < iters; ++k) errs[k] = std::abs(curve[k + 1] - e_ref);
    err_curves[static_cast<std::size_t>(idx)] = std::move(errs);
  });

  json config{{"command", "random-bench"},
              {"qubits", args.qubit_counts},
              {"states", args.states},
              {"seed", args.seed},
              {"vdge", args.run.echo()},
              {"oracle", args.oracle.echo()}};
  Output out(args.output);
  write_csv_header(out.stream(), "random-bench", config,
                   "n,k,err_median,err_q1,err_q3,states,reps,iters,shots,seed");
  std::vector<double> column(static_cast<std::size_t>(args.states));
  for (std::size_t n_idx = 0; n_idx < args.qubit_counts.size(); ++n_idx) {
    for (std::size_t k = 0; k < iters; ++k) {
      for (int i = 0; i < args.states; ++i) {
        column[static_cast<std::size_t>(i)] = err_curves[n_idx * args.states + i][k];
      }
      const Quartiles q = quartiles(column);
      out.stream() << args.qubit_counts[n_idx] << ',' << (k + 1) << ',' << format_double(q.median)
                   << ',' << format_double(q.q1) << ',' << format_double(q.q3) << ','
                   << args.states << ',' << args.run.repetitions << ',' << args.run.iterations
                   << ',' << args.run.shots << ',' << args.seed << '\n';
    }
  }
  out.finish();
  return 0;
}

// ---- mps-bench ---------------------------------------------------------

struct MpsBenchArgs {
  int qubits = 12;
  double lambda = 0.1;
  std::string family = "both";
  int states = 100;
  std::string output = "-";
  RunOpts run;
  OracleOpts oracle;
  std::uint64_t seed = 0;
  int threads = 0;

  // This campaign starts inside a known basin, so it favors a slower gain
  // decay, two repetitions per starting point and a stronger per-state
  // oracle than the generic defaults.
  MpsBenchArgs() {
    run.iterations = 2000;
    run.repetitions = 2;
    run.gain_s = 0.9;
    oracle.starts = 150;
  }
};

int cmd_mps_bench(const MpsBenchArgs& args) {
  std::vector<std::string> families;
  if (args.family == "both") {
    families = {"ghz", "w"};
  } else {
    families = {args.family};
  }
  const std::size_t iters = static_cast<std::size_t>(args.run.iterations);

  json config{{"command", "mps-bench"}, {"qubits", args.qubits}, {"lambda", args.lambda},
              {"family", args.family},  {"states", args.states}, {"seed", args.seed},
              {"vdge", args.run.echo()}, {"oracle", args.oracle.echo()}};
  Output out(args.output);
  write_csv_header(out.stream(), "mps-bench", config,
                   "family,n,lambda,k,err_median,err_q1,err_q3,states,reps,iters,shots,seed");

  for (std::size_t fam_idx = 0; fam_idx < families.size(); ++fam_idx) {
    const std::string& family = families[fam_idx];
    StateHandle base;
    if (family == "ghz") {
      check_status(vdge_state_mps_ghz(args.qubits, &base.ptr), 2);
    } else {
      check_status(vdge_state_mps_w(args.qubits, &base.ptr), 2);
    }

    // Initialization at the unperturbed family optimum. The GHZ maximum is
    // attained at both |0..0> and |1..1>, so one run starts from each
    // branch; the W optimum is a single connected manifold.
    std::vector<std::vector<double>> inits;
    if (family == "ghz") {
      std::vector<double> zeros(4 * static_cast<std::size_t>(args.qubits), 0.0);
      std::vector<double> ones(4 * static_cast<std::size_t>(args.qubits), 0.0);
      for (int q = 0; q < args.qubits; ++q) {
        zeros[4 * static_cast<std::size_t>(q)] = 1.0;      // alpha = 1
        ones[4 * static_cast<std::size_t>(q) + 2] = 1.0;   // beta = 1
      }
      inits.push_back(std::move(zeros));
      inits.push_back(std::move(ones));
    } else {
      std::vector<double> argmax;
      oracle_e(base.ptr, args.oracle, mix_seed(args.seed, 0xF0 + fam_idx), args.threads, &argmax);
      inits.push_back(std::move(argmax));
    }

    std::vector<std::vector<double>> err_curves(static_cast<std::size_t>(args.states));
    run_tasks(args.states, args.threads, [&](std::int64_t idx) {
      const std::uint64_t tag = (fam_idx << 32) + static_cast<std::uint64_t>(idx);
      StateHandle state;
      check_status(
          vdge_state_perturb_mps(base.ptr, args.lambda, mix_seed(args.seed, tag, 1), &state.ptr),
          1);
      const double e_ref = oracle_e(state.ptr, args.oracle, mix_seed(args.seed, tag, 2), 1);

      std::vector<double> merged;
      for (std::size_t b = 0; b < inits.size(); ++b) {
        const vdge_run_options opts =
            args.run.to_c(mix_seed(args.seed, tag, 3 + b), 1, inits[b].data());
        ResultHandle result;
        check_status(vdge_run(state.ptr, &opts, &result.ptr), 1);
        std::vector<double> curve(iters + 1);
        check_status(vdge_result_iteration_estimates(result.ptr, curve.data()), 1);
        if (merged.empty()) {
          merged = std::move(curve);
        } else {
          for (std::size_t k = 0; k < merged.size(); ++k) {
            merged[k] = std::min(merged[k], curve[k]);
          }
        }
      }
      std::vector<double> errs(iters);
      for (std::size_t k = 0; k < iters; ++k) errs[k] = std::abs(merged[k + 1] - e_ref);
      err_curves[static_cast<std::size_t>(idx)] = std::move(errs);
    });

    std::vector<double> column(static_cast<std::size_t>(args.states));
    for (std::size_t k = 0; k < iters; ++k) {
      for (int i = 0; i < args.states; ++i) column[static_cast<std::size_t>(i)] = err_curves[i][k];
      const Quartiles q = quartiles(column);
      out.stream() << family << ',' << args.qubits << ',' << format_double(args.lambda) << ','
                   << (k + 1) << ',' << format_double(q.median) << ',' << format_double(q.q1)
                   << ',' << format_double(q.q3) << ',' << args.states << ','
                   << args.run.repetitions << ',' << args.run.iterations << ',' << args.run.shots
                   << ',' << args.seed << '\n';
    }
  }
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational estimation of the geometric measure of entanglement"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a config file");

  EstimateArgs estimate;
  CLI::App* cmd_est = app.add_subcommand("estimate", "Estimate the GME of a state file");
  cmd_est->add_option("input", estimate.input, "State document (dense or MPS)")->required();
  cmd_est->add_option("--backend", estimate.backend, "Backend: auto, dense or mps")
      ->check(CLI::IsMember({"auto", "dense", "mps"}))
      ->capture_default_str();
  cmd_est->add_option("--output,-o", estimate.output, "Output path or - for stdout")
      ->capture_default_str();
  cmd_est->add_option("--seed", estimate.seed, "Master seed")->capture_default_str();
  cmd_est->add_option("--threads", estimate.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  estimate.run.add_options(cmd_est);
  estimate.oracle.add_options(cmd_est);

  GwSweepArgs gw;
  CLI::App* cmd_gw = app.add_subcommand("gw-sweep", "GHZ/W superposition sweep");
  cmd_gw->add_option("--phi", gw.phis, "Relative phases (radians)")
      ->delimiter(',')
      ->capture_default_str();
  cmd_gw->add_option("--s-count", gw.s_count, "Equally spaced s values in [0, 1]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_gw->add_option("--samples", gw.samples, "Independent best-of-reps samples per state")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_gw->add_option("--output,-o", gw.output, "Output CSV path or -")->capture_default_str();
  cmd_gw->add_option("--seed", gw.seed, "Master seed")->capture_default_str();
  cmd_gw->add_option("--threads", gw.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  gw.run.add_options(cmd_gw);
  gw.oracle.add_options(cmd_gw);

  RandomBenchArgs bench;
  CLI::App* cmd_bench = app.add_subcommand("random-bench", "Haar-random state convergence bench");
  cmd_bench->add_option("--qubits,-n", bench.qubit_counts, "Qubit counts")
      ->delimiter(',')
      ->capture_default_str();
  cmd_bench->add_option("--states", bench.states, "States per qubit count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_bench->add_option("--output,-o", bench.output, "Output CSV path or -")
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench.seed, "Master seed")->capture_default_str();
  cmd_bench->add_option("--threads", bench.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  bench.run.add_options(cmd_bench);
  bench.oracle.add_options(cmd_bench);

  MpsBenchArgs mps;
  CLI::App* cmd_mps = app.add_subcommand("mps-bench", "Perturbed GHZ/W MPS campaign");
  cmd_mps->add_option("--qubits,-n", mps.qubits, "Qubit count")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  cmd_mps->add_option("--lambda", mps.lambda, "Perturbation variance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_mps->add_option("--family", mps.family, "State family: ghz, w or both")
      ->check(CLI::IsMember({"ghz", "w", "both"}))
      ->capture_default_str();
  cmd_mps->add_option("--states", mps.states, "Perturbed states per family")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_mps->add_option("--output,-o", mps.output, "Output CSV path or -")->capture_default_str();
  cmd_mps->add_option("--seed", mps.seed, "Master seed")->capture_default_str();
  cmd_mps->add_option("--threads", mps.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  mps.run.add_options(cmd_mps);
  mps.oracle.add_options(cmd_mps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_est->parsed()) return cmd_estimate(estimate);
    if (cmd_gw->parsed()) return cmd_gw_sweep(gw);
    if (cmd_bench->parsed()) return cmd_random_bench(bench);
    if (cmd_mps->parsed()) return cmd_mps_bench(mps);
  } catch (const CliFailure& e) {
    std::cerr << "vdge: error: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "vdge: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
