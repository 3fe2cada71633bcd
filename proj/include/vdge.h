/* vdge.h - C API for the VDGE geometric-entanglement estimation library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Every fallible call returns a vdge_status; on failure the out-parameters
 * are untouched and vdge_last_error() gives a thread-local message.
 *
 * Product parameters cross this boundary as interleaved doubles, four per
 * qubit: [re a_1, im a_1, re b_1, im b_1, re a_2, ...] where the pair
 * (a_i, b_i) is the unnormalized single-qubit state a_i|0> + b_i|1>.
 * Dense amplitudes use the same [re, im] interleaving in index order with
 * qubit 1 as the most significant bit.
 */
#ifndef VDGE_H
#define VDGE_H

#include <stdint.h>

#if defined(_WIN32)
#define VDGE_API __declspec(dllexport)
#else
#define VDGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vdge_status {
  VDGE_OK = 0,
  VDGE_ERR_INVALID_ARGUMENT = 1,
  VDGE_ERR_DEGENERATE_PAIR = 2,
  VDGE_ERR_INVALID_QUBIT_COUNT = 3,
  VDGE_ERR_OUT_OF_RANGE = 4,
  VDGE_ERR_DIMENSION_MISMATCH = 5,
  VDGE_ERR_ZERO_NORM = 6,
  VDGE_ERR_TOO_LARGE = 7,
  VDGE_ERR_EMPTY_INPUT = 8,
  VDGE_ERR_DEGENERATE_RUN = 9,
  VDGE_ERR_IO = 10,
  VDGE_ERR_PARSE = 11,
  VDGE_ERR_NULL_POINTER = 12,
  VDGE_ERR_RUNTIME = 13
} vdge_status;

typedef struct vdge_state vdge_state;   /* dense or MPS pure state */
typedef struct vdge_result vdge_result; /* output of a VDGE run */

VDGE_API const char* vdge_version(void);

/* Message for the most recent failure on this thread. */
VDGE_API const char* vdge_last_error(void);

/* ---- states ---------------------------------------------------------- */

VDGE_API vdge_status vdge_state_ghz(int n, vdge_state** out);
VDGE_API vdge_status vdge_state_w(int n, vdge_state** out);
VDGE_API vdge_status vdge_state_gw(double s, double phi, vdge_state** out);
VDGE_API vdge_status vdge_state_haar_random(int n, uint64_t seed, vdge_state** out);
/* amps: 2 * 2^n doubles, interleaved [re, im]; renormalized if the norm is
 * within 1e-6 of 1, rejected otherwise. */
VDGE_API vdge_status vdge_state_from_amplitudes(int n, const double* amps, vdge_state** out);
/* Dense product state from pairs (4n doubles). */
VDGE_API vdge_status vdge_state_product(int n, const double* pairs, vdge_state** out);

VDGE_API vdge_status vdge_state_mps_ghz(int n, vdge_state** out);
VDGE_API vdge_status vdge_state_mps_w(int n, vdge_state** out);
/* Gaussian perturbation of every MPS tensor entry (variance lambda on real
 * and imaginary parts), renormalized. Input must be an MPS state. */
VDGE_API vdge_status vdge_state_perturb_mps(const vdge_state* state, double lambda, uint64_t seed,
                                            vdge_state** out);
/* Dense copy of an MPS state (n <= 20). */
VDGE_API vdge_status vdge_state_mps_to_dense(const vdge_state* state, vdge_state** out);

/* State documents as described in the README (dense or MPS, detected by
 * their fields). */
VDGE_API vdge_status vdge_state_read(const char* path, vdge_state** out);
VDGE_API vdge_status vdge_state_write(const vdge_state* state, const char* path);

VDGE_API int vdge_state_qubits(const vdge_state* state); /* -1 on null */
VDGE_API int vdge_state_is_mps(const vdge_state* state); /* 1, 0, or -1 on null */

/* Exact |<phi(pairs)|psi>|^2 for this state (pairs: 4n doubles). */
VDGE_API vdge_status vdge_state_exact_fidelity(const vdge_state* state, const double* pairs,
                                               double* out);

VDGE_API void vdge_state_free(vdge_state* state);

/* ---- VDGE runs ------------------------------------------------------- */

typedef struct vdge_run_options {
  int64_t shots;        /* ensemble size N per fidelity estimate */
  double readout_flip;  /* per-qubit readout bit-flip probability, [0, 0.5] */
  double gain_a;        /* gain numerator */
  double gain_b;        /* perturbation numerator */
  double gain_stability; /* stability offset A */
  double gain_s;        /* gain exponent */
  double gain_t;        /* perturbation exponent */
  int64_t iterations;   /* CSPSA iterations K */
  int64_t repetitions;  /* multi-start repetitions R */
  uint64_t seed;        /* master seed; repetition j uses stream j */
  const double* init_pairs; /* NULL: Haar-random start per repetition;
                               else 4n doubles used by every repetition */
  int threads;          /* <= 0: hardware concurrency */
} vdge_run_options;

/* Fills in the defaults: N = 8192, p = 0, a = 3.0, b = 0.1, A = 0, s = 1,
 * t = 1/6, K = 150, R = 5, seed = 0, Haar init, 1 thread. */
VDGE_API void vdge_run_options_init(vdge_run_options* options);

VDGE_API vdge_status vdge_run(const vdge_state* state, const vdge_run_options* options,
                              vdge_result** out);

VDGE_API double vdge_result_estimate(const vdge_result* result); /* selected estimate */
VDGE_API double vdge_result_lambda2(const vdge_result* result);  /* 1 - estimate */
VDGE_API int64_t vdge_result_repetitions(const vdge_result* result);
VDGE_API int64_t vdge_result_iterations(const vdge_result* result);
VDGE_API int64_t vdge_result_best_repetition(const vdge_result* result);
VDGE_API int64_t vdge_result_objective_evaluations(const vdge_result* result);
/* out: R doubles. */
VDGE_API vdge_status vdge_result_estimates(const vdge_result* result, double* out);
VDGE_API vdge_status vdge_result_final_fidelities(const vdge_result* result, double* out);
/* f_plus/f_minus: K doubles each, the sampled fidelities at the perturbed
 * points of every iteration of one repetition. Either may be NULL. */
VDGE_API vdge_status vdge_result_trace(const vdge_result* result, int64_t repetition,
                                       double* f_plus, double* f_minus);
/* out: K+1 doubles; exact fidelity of the iterates theta_0 .. theta_K of
 * one repetition (simulation diagnostic, not part of the estimate). */
VDGE_API vdge_status vdge_result_trace_exact(const vdge_result* result, int64_t repetition,
                                             double* out);
/* pairs: 4n doubles, final parameters of one repetition. */
VDGE_API vdge_status vdge_result_final_pairs(const vdge_result* result, int64_t repetition,
                                             double* pairs);
/* out: K+1 doubles; diagnostic estimate after each iteration (entry 0 is
 * the initialization), best exact fidelity across repetitions. */
VDGE_API vdge_status vdge_result_iteration_estimates(const vdge_result* result, double* out);

VDGE_API void vdge_result_free(vdge_result* result);

/* ---- classical reference oracle -------------------------------------- */

typedef struct vdge_oracle_options {
  int64_t starts;     /* multi-start count */
  int64_t max_sweeps; /* per-start sweep cap */
  double tol;         /* convergence threshold on fidelity change per sweep */
  uint64_t seed;
  int threads;
} vdge_oracle_options;

/* Defaults: 50 starts, 500 sweeps, tol = 1e-12, seed = 0, 1 thread. */
VDGE_API void vdge_oracle_options_init(vdge_oracle_options* options);

/* Multi-start alternating rank-1 reference value. argmax_pairs may be NULL,
 * otherwise it receives 4n doubles. */
VDGE_API vdge_status vdge_oracle_gme(const vdge_state* state, const vdge_oracle_options* options,
                                     double* e, double* lambda2, double* argmax_pairs);

/* Largest-squared-Schmidt-coefficient cross-check, dense 2-qubit states. */
VDGE_API vdge_status vdge_schmidt_gme_2q(const vdge_state* state, double* e);

/* ---- statistics ------------------------------------------------------- */

/* Quartiles by linear interpolation between order statistics. */
VDGE_API vdge_status vdge_summarize(const double* values, int64_t count, double* median,
                                    double* q1, double* q3);

/* Percentile bootstrap interval for the median. */
VDGE_API vdge_status vdge_bootstrap_median(const double* values, int64_t count, int64_t resamples,
                                           double confidence, uint64_t seed, double* lo,
                                           double* hi);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VDGE_H */
