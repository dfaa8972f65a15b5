/*
 * Copyright 2026 The qcc Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface to the qcc library: prepotential systems, classical equilibria
 * and normal modes, classical eigenfunction checks, 1D grid spectra and the
 * quantum/classical spectrum correspondence.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_destroy function. Functions return a qcc_status; on failure the
 * message is available from qcc_last_error() on the same thread. Strings
 * returned through char** are heap-allocated and released with
 * qcc_string_free().
 */

#ifndef QCC_QCC_H
#define QCC_QCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QCC_BUILDING_LIBRARY)
#    define QCC_API __declspec(dllexport)
#  else
#    define QCC_API __declspec(dllimport)
#  endif
#else
#  define QCC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcc_status {
  QCC_OK = 0,
  QCC_ERR_CATALOG = 1,      /* unknown system name */
  QCC_ERR_VALIDATION = 2,   /* bad parameter or argument value */
  QCC_ERR_DOMAIN = 3,       /* point outside the system domain */
  QCC_ERR_SOLVER = 4,       /* equilibrium search failed */
  QCC_ERR_CONVERGENCE = 5,  /* grid refinement failed */
  QCC_ERR_INPUT = 6,        /* malformed input to a fit or decomposition */
  QCC_ERR_PRECONDITION = 7, /* operation not applicable to this input */
  QCC_ERR_NULL_ARGUMENT = 8,
  QCC_ERR_INTERNAL = 9
} qcc_status;

QCC_API const char* qcc_version(void);
QCC_API const char* qcc_status_string(qcc_status status);
/* Message of the last failed call on this thread ("" if none). */
QCC_API const char* qcc_last_error(void);
QCC_API void qcc_string_free(char* str);

/* ---- systems ---------------------------------------------------------- */

typedef struct qcc_system qcc_system;

/* W(q); q has `dimension` entries. */
typedef double (*qcc_scalar_fn)(const double* q, size_t dimension, void* user_data);
/* Writes `dimension` (gradient) or dimension*dimension (row-major Hessian) values. */
typedef void (*qcc_array_fn)(const double* q, size_t dimension, double* out, void* user_data);

/* params_json: JSON object of named reals, e.g. {"N":3,"omega":1,"g":1}. */
QCC_API qcc_status qcc_system_create(const char* name, const char* params_json, qcc_system** out);
/* User-defined prepotential on R^dimension; gradient/hessian may be NULL. */
QCC_API qcc_status qcc_system_create_custom(const char* name, size_t dimension, qcc_scalar_fn prepotential,
                                            qcc_array_fn gradient, qcc_array_fn hessian,
                                            void* user_data, qcc_system** out);
QCC_API void qcc_system_destroy(qcc_system* system);

QCC_API size_t qcc_system_dimension(const qcc_system* system);
QCC_API qcc_status qcc_system_default_guess(const qcc_system* system, double* out);
QCC_API qcc_status qcc_system_prepotential(const qcc_system* system, const double* q, double* out);
QCC_API qcc_status qcc_system_gradient(const qcc_system* system, const double* q, double* out);
QCC_API qcc_status qcc_system_classical_potential(const qcc_system* system, const double* q, double* out);
QCC_API qcc_status qcc_system_quantum_potential(const qcc_system* system, const double* q, double hbar,
                                                double* out);

/* ---- equilibrium ------------------------------------------------------ */

typedef struct qcc_equilibrium qcc_equilibrium;

/* guess may be NULL (system default); tol <= 0 selects 1e-12. */
QCC_API qcc_status qcc_equilibrium_find(const qcc_system* system, const double* guess, double tol,
                                        qcc_equilibrium** out);
QCC_API void qcc_equilibrium_destroy(qcc_equilibrium* eq);
QCC_API size_t qcc_equilibrium_dimension(const qcc_equilibrium* eq);
QCC_API double qcc_equilibrium_grad_norm(const qcc_equilibrium* eq);
QCC_API qcc_status qcc_equilibrium_qbar(const qcc_equilibrium* eq, double* out);
/* Ascending normal-mode frequencies. */
QCC_API qcc_status qcc_equilibrium_frequencies(const qcc_equilibrium* eq, double* out);
/* Row-major: out[j*r + i] is component i of mode j. */
QCC_API qcc_status qcc_equilibrium_modes(const qcc_equilibrium* eq, double* out);
QCC_API qcc_status qcc_equilibrium_to_json(const qcc_equilibrium* eq, char** out);
QCC_API qcc_status qcc_equilibrium_to_csv(const qcc_equilibrium* eq, char** out);

/* ---- 1D grid spectra -------------------------------------------------- */

typedef struct qcc_grid {
  double half_width;
  size_t points;
  size_t levels;
} qcc_grid;

typedef struct qcc_spectrum qcc_spectrum;

QCC_API qcc_status qcc_grid_default(const qcc_system* system, double hbar, size_t levels, qcc_grid* out);
/* Single solve on exactly this grid. */
QCC_API qcc_status qcc_spectrum_solve(const qcc_system* system, double hbar, const qcc_grid* grid,
                                      qcc_spectrum** out);
/* Refined until converged; base may be NULL (default grid for `levels`). rel_tol <= 0 selects 1e-8. */
QCC_API qcc_status qcc_spectrum_converge(const qcc_system* system, double hbar, const qcc_grid* base,
                                         size_t levels, double rel_tol, qcc_spectrum** out);
QCC_API void qcc_spectrum_destroy(qcc_spectrum* spectrum);
QCC_API size_t qcc_spectrum_levels(const qcc_spectrum* spectrum);
QCC_API double qcc_spectrum_hbar(const qcc_spectrum* spectrum);
QCC_API qcc_status qcc_spectrum_energies(const qcc_spectrum* spectrum, double* out);
/* 1 when the level lies in the continuum and is not trusted. */
QCC_API int qcc_spectrum_level_is_continuum(const qcc_spectrum* spectrum, size_t level);
QCC_API double qcc_spectrum_ground_state_overlap(const qcc_spectrum* spectrum);
QCC_API qcc_status qcc_spectrum_grid(const qcc_spectrum* spectrum, qcc_grid* out);
QCC_API qcc_status qcc_spectrum_to_json(const qcc_spectrum* spectrum, char** out);
QCC_API qcc_status qcc_spectrum_to_csv(const qcc_spectrum* spectrum, char** out);

/* ---- classical eigenfunctions ----------------------------------------- */

/* JSON array of {label, eigenvalue, residual, vanishing, hessian_residual, ...}
 * over the system's closed-form eigenfunctions (or linearized modes) and
 * their pairwise products. */
QCC_API qcc_status qcc_verify(const qcc_system* system, size_t samples, uint64_t seed, char** json_out,
                              char** csv_out);

/* ---- correspondence --------------------------------------------------- */

typedef struct qcc_correspond_options {
  const double* hbar; /* NULL selects the default sweep */
  size_t hbar_count;
  size_t levels;      /* 0 selects 6 */
  const qcc_grid* grid; /* NULL selects a per-hbar default */
  double rel_tol;     /* <= 0 selects 1e-8 */
  double match_tol;   /* <= 0 selects 1e-3 * max frequency */
  int max_total;      /* <= 0 selects 12 */
  int force_reference;
  unsigned workers;   /* 0 or 1: sequential */
} qcc_correspond_options;

typedef struct qcc_correspondence qcc_correspondence;

QCC_API void qcc_correspond_options_init(qcc_correspond_options* options);
QCC_API qcc_status qcc_correspond_run(const qcc_system* system, const qcc_correspond_options* options,
                                      qcc_correspondence** out);
QCC_API void qcc_correspondence_destroy(qcc_correspondence* run);
QCC_API size_t qcc_correspondence_levels(const qcc_correspondence* run);
QCC_API int qcc_correspondence_all_matched(const qcc_correspondence* run);
QCC_API double qcc_correspondence_calE(const qcc_correspondence* run, size_t level);
QCC_API qcc_status qcc_correspondence_to_json(const qcc_correspondence* run, char** out);
QCC_API qcc_status qcc_correspondence_to_csv(const qcc_correspondence* run, char** out);

/* Writes the best vector to out_vector (count entries) and sets *matched. */
QCC_API qcc_status qcc_decompose(double calE, const double* frequencies, size_t count, double tol,
                                 int max_total, int* out_vector, double* out_residual, int* matched);

#ifdef __cplusplus
}
#endif

#endif /* QCC_QCC_H */
