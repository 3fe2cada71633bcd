#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "vdge.h"

namespace {

struct StateHandle {
  vdge_state* ptr = nullptr;
  ~StateHandle() { vdge_state_free(ptr); }
};

struct ResultHandle {
  vdge_result* ptr = nullptr;
  ~ResultHandle() { vdge_result_free(ptr); }
};

std::vector<double> zeros_pairs(int n) {
  std::vector<double> pairs(4 * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) pairs[4 * static_cast<std::size_t>(i)] = 1.0;  // (1, 0) per qubit
  return pairs;
}

}  // namespace

TEST_CASE("version and error text") {
  CHECK(std::strlen(vdge_version()) > 0);
  vdge_state* out = nullptr;
  CHECK(vdge_state_ghz(1, &out) == VDGE_ERR_INVALID_QUBIT_COUNT);
  CHECK(std::strlen(vdge_last_error()) > 0);
  CHECK(out == nullptr);
}

TEST_CASE("state constructors and queries") {
  StateHandle ghz;
  REQUIRE(vdge_state_ghz(3, &ghz.ptr) == VDGE_OK);
  CHECK(vdge_state_qubits(ghz.ptr) == 3);
  CHECK(vdge_state_is_mps(ghz.ptr) == 0);

  const std::vector<double> pairs = zeros_pairs(3);
  double f = -1.0;
  REQUIRE(vdge_state_exact_fidelity(ghz.ptr, pairs.data(), &f) == VDGE_OK);
  CHECK(f == doctest::Approx(0.5).epsilon(1e-12));

  StateHandle w;
  REQUIRE(vdge_state_w(2, &w.ptr) == VDGE_OK);
  CHECK(vdge_state_qubits(w.ptr) == 2);

  StateHandle gw;
  REQUIRE(vdge_state_gw(0.5, 3.14159, &gw.ptr) == VDGE_OK);
  CHECK(vdge_state_qubits(gw.ptr) == 3);
  CHECK(vdge_state_gw(1.5, 0.0, &gw.ptr) == VDGE_ERR_OUT_OF_RANGE);

  StateHandle haar;
  REQUIRE(vdge_state_haar_random(4, 99, &haar.ptr) == VDGE_OK);
  CHECK(vdge_state_qubits(haar.ptr) == 4);

  StateHandle product;
  REQUIRE(vdge_state_product(2, pairs.data(), &product.ptr) == VDGE_OK);
  double self = -1.0;
  REQUIRE(vdge_state_exact_fidelity(product.ptr, pairs.data(), &self) == VDGE_OK);
  CHECK(self == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(vdge_state_qubits(nullptr) == -1);
  CHECK(vdge_state_is_mps(nullptr) == -1);
  CHECK(vdge_state_ghz(3, nullptr) == VDGE_ERR_NULL_POINTER);
}

TEST_CASE("amplitude construction matches ghz") {
  std::vector<double> amps(16, 0.0);
  const double v = 1.0 / std::sqrt(2.0);
  amps[0] = v;
  amps[14] = v;  // index 7, re part
  StateHandle state;
  REQUIRE(vdge_state_from_amplitudes(3, amps.data(), &state.ptr) == VDGE_OK);
  double f = -1.0;
  const std::vector<double> pairs = zeros_pairs(3);
  REQUIRE(vdge_state_exact_fidelity(state.ptr, pairs.data(), &f) == VDGE_OK);
  CHECK(f == doctest::Approx(0.5).epsilon(1e-12));

  amps[0] = 2.0;  // norm far from 1
  CHECK(vdge_state_from_amplitudes(3, amps.data(), &state.ptr) == VDGE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("mps states over the c api") {
  StateHandle mps;
  REQUIRE(vdge_state_mps_ghz(10, &mps.ptr) == VDGE_OK);
  CHECK(vdge_state_is_mps(mps.ptr) == 1);
  CHECK(vdge_state_qubits(mps.ptr) == 10);

  StateHandle perturbed;
  REQUIRE(vdge_state_perturb_mps(mps.ptr, 0.1, 7, &perturbed.ptr) == VDGE_OK);
  CHECK(vdge_state_is_mps(perturbed.ptr) == 1);

  StateHandle dense;
  REQUIRE(vdge_state_mps_to_dense(perturbed.ptr, &dense.ptr) == VDGE_OK);
  CHECK(vdge_state_is_mps(dense.ptr) == 0);

  // Same parameters, same fidelity through both representations.
  std::vector<double> pairs = zeros_pairs(10);
  pairs[1] = 0.2;
  pairs[6] = -0.4;
  double f_mps = -1.0, f_dense = -2.0;
  REQUIRE(vdge_state_exact_fidelity(perturbed.ptr, pairs.data(), &f_mps) == VDGE_OK);
  REQUIRE(vdge_state_exact_fidelity(dense.ptr, pairs.data(), &f_dense) == VDGE_OK);
  CHECK(f_mps == doctest::Approx(f_dense).epsilon(1e-10));

  CHECK(vdge_state_perturb_mps(dense.ptr, 0.1, 7, &perturbed.ptr) == VDGE_ERR_INVALID_ARGUMENT);

  StateHandle w;
  REQUIRE(vdge_state_mps_w(4, &w.ptr) == VDGE_OK);
  CHECK(vdge_state_qubits(w.ptr) == 4);
}

TEST_CASE("state file round trip") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "vdge_capi_state.json").string();
  StateHandle state;
  REQUIRE(vdge_state_haar_random(3, 5, &state.ptr) == VDGE_OK);
  REQUIRE(vdge_state_write(state.ptr, path.c_str()) == VDGE_OK);

  StateHandle loaded;
  REQUIRE(vdge_state_read(path.c_str(), &loaded.ptr) == VDGE_OK);
  CHECK(vdge_state_qubits(loaded.ptr) == 3);

  std::vector<double> pairs = zeros_pairs(3);
  double fa = -1.0, fb = -2.0;
  REQUIRE(vdge_state_exact_fidelity(state.ptr, pairs.data(), &fa) == VDGE_OK);
  REQUIRE(vdge_state_exact_fidelity(loaded.ptr, pairs.data(), &fb) == VDGE_OK);
  CHECK(fa == doctest::Approx(fb).epsilon(1e-12));
  std::filesystem::remove(path);

  StateHandle missing;
  CHECK(vdge_state_read("/nonexistent/file.json", &missing.ptr) == VDGE_ERR_IO);

  // MPS round trip keeps the representation.
  StateHandle mps;
  REQUIRE(vdge_state_mps_w(5, &mps.ptr) == VDGE_OK);
  const std::string mps_path =
      (std::filesystem::temp_directory_path() / "vdge_capi_mps.json").string();
  REQUIRE(vdge_state_write(mps.ptr, mps_path.c_str()) == VDGE_OK);
  StateHandle mps_loaded;
  REQUIRE(vdge_state_read(mps_path.c_str(), &mps_loaded.ptr) == VDGE_OK);
  CHECK(vdge_state_is_mps(mps_loaded.ptr) == 1);
  std::filesystem::remove(mps_path);
}

TEST_CASE("vdge run over the c api") {
  StateHandle ghz;
  REQUIRE(vdge_state_ghz(3, &ghz.ptr) == VDGE_OK);

  vdge_run_options opts;
  vdge_run_options_init(&opts);
  CHECK(opts.shots == 8192);
  CHECK(opts.iterations == 150);
  opts.iterations = 60;
  opts.repetitions = 4;
  opts.seed = 21;

  ResultHandle result;
  REQUIRE(vdge_run(ghz.ptr, &opts, &result.ptr) == VDGE_OK);
  CHECK(vdge_result_repetitions(result.ptr) == 4);
  CHECK(vdge_result_iterations(result.ptr) == 60);
  CHECK(vdge_result_objective_evaluations(result.ptr) == 2 * 60 * 4 + 4);
  CHECK(std::abs(vdge_result_estimate(result.ptr) - 0.5) < 0.1);
  CHECK(vdge_result_lambda2(result.ptr) ==
        doctest::Approx(1.0 - vdge_result_estimate(result.ptr)));

  std::vector<double> estimates(4), fidelities(4);
  REQUIRE(vdge_result_estimates(result.ptr, estimates.data()) == VDGE_OK);
  REQUIRE(vdge_result_final_fidelities(result.ptr, fidelities.data()) == VDGE_OK);
  const int64_t best = vdge_result_best_repetition(result.ptr);
  REQUIRE(best >= 0);
  REQUIRE(best < 4);
  CHECK(vdge_result_estimate(result.ptr) == estimates[best]);
  for (int j = 0; j < 4; ++j) CHECK(estimates[j] == doctest::Approx(1.0 - fidelities[j]));

  std::vector<double> f_plus(60), f_minus(60);
  REQUIRE(vdge_result_trace(result.ptr, 0, f_plus.data(), f_minus.data()) == VDGE_OK);
  for (int k = 0; k < 60; ++k) {
    CHECK(f_plus[k] >= 0.0);
    CHECK(f_plus[k] <= 1.0);
    CHECK(f_minus[k] >= 0.0);
    CHECK(f_minus[k] <= 1.0);
  }
  CHECK(vdge_result_trace(result.ptr, 9, f_plus.data(), f_minus.data()) == VDGE_ERR_OUT_OF_RANGE);

  std::vector<double> curve(61);  // K+1 diagnostic points
  REQUIRE(vdge_result_iteration_estimates(result.ptr, curve.data()) == VDGE_OK);
  for (double e : curve) {
    CHECK(e <= 1.0);
    CHECK(e >= 0.0);
  }

  std::vector<double> exact(61);
  REQUIRE(vdge_result_trace_exact(result.ptr, 0, exact.data()) == VDGE_OK);
  for (double f : exact) {
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
  }
  CHECK(vdge_result_trace_exact(result.ptr, 9, exact.data()) == VDGE_ERR_OUT_OF_RANGE);

  std::vector<double> final_pairs(12);
  REQUIRE(vdge_result_final_pairs(result.ptr, best, final_pairs.data()) == VDGE_OK);
  double f_final = -1.0;
  REQUIRE(vdge_state_exact_fidelity(ghz.ptr, final_pairs.data(), &f_final) == VDGE_OK);
  CHECK(f_final > 0.4);

  // Same options, same result.
  ResultHandle again;
  REQUIRE(vdge_run(ghz.ptr, &opts, &again.ptr) == VDGE_OK);
  CHECK(vdge_result_estimate(again.ptr) == vdge_result_estimate(result.ptr));
}

TEST_CASE("explicit initialization through the c api") {
  StateHandle mps;
  REQUIRE(vdge_state_mps_ghz(8, &mps.ptr) == VDGE_OK);

  vdge_oracle_options ocfg;
  vdge_oracle_options_init(&ocfg);
  ocfg.starts = 20;
  double e = -1.0, lambda2 = -1.0;
  std::vector<double> argmax(4 * 8);
  REQUIRE(vdge_oracle_gme(mps.ptr, &ocfg, &e, &lambda2, argmax.data()) == VDGE_OK);
  CHECK(e == doctest::Approx(0.5).epsilon(1e-9));

  vdge_run_options opts;
  vdge_run_options_init(&opts);
  opts.iterations = 30;
  opts.repetitions = 1;
  opts.init_pairs = argmax.data();
  opts.seed = 4;
  ResultHandle result;
  REQUIRE(vdge_run(mps.ptr, &opts, &result.ptr) == VDGE_OK);

  // Starting at the optimum, the very first perturbed evaluations sit near
  // the entanglement eigenvalue; a Haar start of GHZ_8 sits near 2^-8.
  std::vector<double> f_plus(30);
  REQUIRE(vdge_result_trace(result.ptr, 0, f_plus.data(), nullptr) == VDGE_OK);
  CHECK(f_plus[0] > 0.3);

  opts.init_pairs = nullptr;
  ResultHandle haar_start;
  REQUIRE(vdge_run(mps.ptr, &opts, &haar_start.ptr) == VDGE_OK);
  std::vector<double> f_plus_haar(30);
  REQUIRE(vdge_result_trace(haar_start.ptr, 0, f_plus_haar.data(), nullptr) == VDGE_OK);
  CHECK(f_plus_haar[0] < 0.1);
}

TEST_CASE("oracle and schmidt over the c api") {
  StateHandle ghz;
  REQUIRE(vdge_state_ghz(2, &ghz.ptr) == VDGE_OK);

  vdge_oracle_options ocfg;
  vdge_oracle_options_init(&ocfg);
  CHECK(ocfg.starts == 50);
  double e = -1.0, lambda2 = -1.0;
  REQUIRE(vdge_oracle_gme(ghz.ptr, &ocfg, &e, &lambda2, nullptr) == VDGE_OK);
  CHECK(e == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(lambda2 == doctest::Approx(0.5).epsilon(1e-9));

  double e_schmidt = -1.0;
  REQUIRE(vdge_schmidt_gme_2q(ghz.ptr, &e_schmidt) == VDGE_OK);
  CHECK(e_schmidt == doctest::Approx(0.5).epsilon(1e-12));

  StateHandle big;
  REQUIRE(vdge_state_ghz(3, &big.ptr) == VDGE_OK);
  CHECK(vdge_schmidt_gme_2q(big.ptr, &e_schmidt) == VDGE_ERR_DIMENSION_MISMATCH);
}

TEST_CASE("statistics over the c api") {
  const double values[4] = {1.0, 2.0, 3.0, 4.0};
  double median = 0.0, q1 = 0.0, q3 = 0.0;
  REQUIRE(vdge_summarize(values, 4, &median, &q1, &q3) == VDGE_OK);
  CHECK(median == doctest::Approx(2.5));
  CHECK(q1 == doctest::Approx(1.75));
  CHECK(q3 == doctest::Approx(3.25));
  CHECK(vdge_summarize(values, 0, &median, &q1, &q3) == VDGE_ERR_EMPTY_INPUT);

  const std::vector<double> constant(50, 0.5);
  double lo = -1.0, hi = -1.0;
  REQUIRE(vdge_bootstrap_median(constant.data(), 50, 200, 0.95, 3, &lo, &hi) == VDGE_OK);
  CHECK(lo == 0.5);
  CHECK(hi == 0.5);
}
