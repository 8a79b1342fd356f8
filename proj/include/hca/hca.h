/*
 * C interface to the Hamiltonian cellular-automaton laboratory.
 *
 * The library evolves integer-valued automata exactly, checks their
 * conservation laws and action stationarity in exact arithmetic, and runs
 * config-driven scenarios. All exact quantities cross this boundary as
 * decimal strings ("k" or "k/2") so no value is squeezed through a finite
 * integer type. Handles are opaque; every fallible call returns an
 * hca_status and leaves a human-readable message in hca_last_error().
 */

#ifndef HCA_H
#define HCA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hca_status {
  HCA_OK = 0,
  HCA_ERROR_INVALID_ARGUMENT,
  HCA_ERROR_DIMENSION_MISMATCH,
  HCA_ERROR_NOT_SYMMETRIC,
  HCA_ERROR_NOT_ANTISYMMETRIC,
  HCA_ERROR_NOT_SELF_ADJOINT,
  HCA_ERROR_NOT_COMMUTING,
  HCA_ERROR_NON_CONSECUTIVE_STATES,
  HCA_ERROR_TOO_SHORT,
  HCA_ERROR_BOUNDARY_SITE,
  HCA_ERROR_ZERO_VARIATION,
  HCA_ERROR_OUT_OF_RANGE,
  HCA_ERROR_DIMENSION_TOO_LARGE,
  HCA_ERROR_EMPTY_WINDOW,
  HCA_ERROR_NON_FINITE_TIME,
  HCA_ERROR_OUTSIDE_TRUSTED_REGION,
  HCA_ERROR_NOT_HERMITIAN,
  HCA_ERROR_NO_CONVERGENCE,
  HCA_ERROR_UNSTABLE_SPECTRUM,
  HCA_ERROR_STABILITY_VIOLATED,
  HCA_ERROR_TOO_FEW_SCALES,
  HCA_ERROR_FLOAT_OVERFLOW,
  HCA_ERROR_NON_CONSTANT_LAPSE,
  HCA_ERROR_PARSE,
  HCA_ERROR_IO,
  HCA_ERROR_CONFIG,
  HCA_ERROR_INTERNAL
} hca_status;

const char* hca_version(void);
const char* hca_status_name(hca_status status);

/* Message for the most recent failing call on this thread ("" if none). */
const char* hca_last_error(void);

/* Frees strings returned through char** out-parameters. */
void hca_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Hamiltonian: integer symmetric S and antisymmetric A, dim x dim,    */
/* row-major arrays of decimal strings.                                */

typedef struct hca_hamiltonian hca_hamiltonian;

hca_status hca_hamiltonian_create(int32_t dim, const char* const* s_entries,
                                  const char* const* a_entries,
                                  hca_hamiltonian** out);
void hca_hamiltonian_free(hca_hamiltonian* h);
int32_t hca_hamiltonian_dim(const hca_hamiltonian* h);

/* ------------------------------------------------------------------ */
/* Trajectories.                                                       */

typedef struct hca_trajectory hca_trajectory;

typedef enum hca_field {
  HCA_FIELD_X = 0,
  HCA_FIELD_P = 1,
  HCA_FIELD_TAU = 2,
  HCA_FIELD_PI = 3
} hca_field;

/*
 * Leapfrog evolution from the initial pair (state 0, state 1) for `steps`
 * further states. Vectors are arrays of `dim` decimal strings; tau0, pi0,
 * tau1, pi1 may be NULL for the defaults 0, 0, 1, 0. pi accepts "k/2".
 */
hca_status hca_evolve(const hca_hamiltonian* h, int64_t lapse,
                      const char* const* x0, const char* const* p0,
                      const char* const* x1, const char* const* p1,
                      const char* tau0, const char* pi0, const char* tau1,
                      const char* pi1, int64_t steps, hca_trajectory** out);
void hca_trajectory_free(hca_trajectory* t);
int64_t hca_trajectory_length(const hca_trajectory* t);

/* Value at 0-based state offset; component is ignored for TAU and PI. */
hca_status hca_trajectory_value(const hca_trajectory* t, int64_t offset,
                                hca_field field, int32_t component,
                                char** out);

hca_status hca_trajectory_write_csv(const hca_trajectory* t, const char* path);
hca_status hca_trajectory_read_csv(const hca_hamiltonian* h, int64_t lapse,
                                   const char* path, hca_trajectory** out);

/* Runs the evolution backwards from the final pair; *bit_exact becomes 1
 * iff the initial pair is reproduced exactly. */
hca_status hca_trajectory_reverse_check(const hca_trajectory* t,
                                        int32_t* bit_exact);

/* Exact action values as decimal strings ("k" or "k/2"). */
hca_status hca_discrete_action(const hca_trajectory* t, char** out);
hca_status hca_psi_action(const hca_trajectory* t, char** out);

/* Number of interior (site, variable) pairs with nonzero unit variation. */
hca_status hca_stationarity_violations(const hca_trajectory* t,
                                       int64_t* count);

/* Conservation reports for the commutant family {I, H, ..., H^degree};
 * JSON array of {G_label, values, max_violation}. */
hca_status hca_conservation_report_json(const hca_trajectory* t,
                                        int32_t degree, char** out_json);

/* ------------------------------------------------------------------ */
/* Spectral and symmetry analysis.                                     */

hca_status hca_admissible_unitaries_json(const hca_hamiltonian* h,
                                         char** out_json);
hca_status hca_spectrum_json(const hca_hamiltonian* h, double l,
                             int64_t lapse, char** out_json);

/* ------------------------------------------------------------------ */
/* Scenario runner.                                                    */

typedef struct hca_run_result hca_run_result;

/* output_dir and seed_override may be NULL to use the scenario's values. */
hca_status hca_run_scenario(const char* scenario_path, const char* output_dir,
                            const int64_t* seed_override,
                            hca_run_result** out);

/* dims may be NULL (with dims_count 0) for the default {1, 2, 3, 4};
 * steps <= 0 selects the default. */
hca_status hca_run_suite(uint64_t seed, int64_t trials, const int32_t* dims,
                         int32_t dims_count, int64_t entry_bound,
                         int64_t steps, const char* output_dir,
                         hca_run_result** out);

int32_t hca_run_result_exit_code(const hca_run_result* r);
const char* hca_run_result_report_json(const hca_run_result* r);
const char* hca_run_result_error(const hca_run_result* r);
double hca_run_result_wall_seconds(const hca_run_result* r);
void hca_run_result_free(hca_run_result* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HCA_H */
