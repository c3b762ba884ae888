#ifndef SPECTRAL_BOUNDS_H
#define SPECTRAL_BOUNDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum {
  SB_OPERATOR_LAPLACE = 0,
  SB_OPERATOR_STOKES = 1,
  SB_OPERATOR_BILAPLACE = 2,
} SbOperator;

/**
 * Status codes.
 */
typedef enum {
  SB_STATUS_OK = 0,
  SB_STATUS_NULL_POINTER = 1,
  SB_STATUS_INVALID_INPUT = 2,
  SB_STATUS_PARSE = 3,
  SB_STATUS_UNSUPPORTED = 4,
  SB_STATUS_SCALED_MASS_BELOW_ONE = 5,
  SB_STATUS_NO_CONVERGENCE = 6,
  SB_STATUS_INFEASIBLE = 7,
  SB_STATUS_VIOLATION = 8,
  SB_STATUS_OUT_OF_RANGE = 9,
  SB_STATUS_PANIC = 10,
} SbStatus;

/**
 * Opaque domain handle.
 */
typedef struct SbShape SbShape;

/**
 * Opaque eigenvalue list handle.
 */
typedef struct SbSpectrum SbSpectrum;

/**
 * All bounds at one `m`. Values that do not apply to the operator are NaN
 * and their `has_*` flag is false.
 */
typedef struct {
  double m;
  double m_star;
  double exact;
  double liyau;
  double melas;
  double asymptotic;
  double theorem_form;
  double epsilon;
  bool has_liyau;
  bool has_melas;
  bool has_asymptotic;
  bool has_theorem_form;
  bool has_epsilon;
  bool degenerate;
} SbBoundReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *sb_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sb_version(void);

/**
 * Parses a JSON shape document.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
SbStatus sb_shape_from_json(const char *json, SbShape **out);

/**
 * Axis-aligned box with its lower corner at the origin.
 *
 * # Safety
 * `sides` must point to `n` doubles and `out` must be valid.
 */
SbStatus sb_shape_box(const double *sides, size_t n, SbShape **out);

/**
 * # Safety
 * `shape` must be null or a handle from this library not yet freed.
 */
void sb_shape_free(SbShape *shape);

/**
 * Dimension, volume and minimal second moment `∫|x - c|²`.
 *
 * # Safety
 * `shape` must be a live handle; out-pointers must be valid.
 */
SbStatus sb_shape_summary(const SbShape *shape, size_t *dimension, double *volume, double *inertia);

/**
 * Plateau parameter: root `t ≥ 0` of `(t+1)^{n+1} - t^{n+1} = m_star`.
 *
 * # Safety
 * `out` must be valid.
 */
SbStatus sb_solve_t(size_t n, double m_star, double *out);

/**
 * Minimum of `∫|ξ|² F` over radial `0 ≤ F ≤ M`, `-F' ≤ L`, `∫F = m`.
 *
 * # Safety
 * `out` must be valid.
 */
SbStatus sb_sigma_exact(size_t n, double cap, double slope, double mass, double *out);

/**
 * Smallest scaled mass for which the theorem constants hold.
 *
 * # Safety
 * `out` must be valid.
 */
SbStatus sb_m_star_floor(SbOperator op, size_t n, double *out);

/**
 * Every bound for `op` on `shape` at `m`.
 *
 * # Safety
 * `shape` must be a live handle and `out` valid.
 */
SbStatus sb_bound_exact(const SbShape *shape, SbOperator op, double m, SbBoundReport *out);

/**
 * First `m` Dirichlet Laplacian eigenvalues of the box with the given sides.
 *
 * # Safety
 * `sides` must point to `n` doubles and `out` must be valid.
 */
SbStatus sb_box_spectrum(const double *sides, size_t n, size_t m, SbSpectrum **out);

/**
 * Number of eigenvalues held, or 0 for a null handle.
 *
 * # Safety
 * `spectrum` must be null or a live handle.
 */
size_t sb_spectrum_len(const SbSpectrum *spectrum);

/**
 * Copies up to `capacity` eigenvalues, ascending, into `buffer` and stores
 * the number written in `written`.
 *
 * # Safety
 * `spectrum` must be live; `buffer` must hold `capacity` doubles.
 */
SbStatus sb_spectrum_copy(const SbSpectrum *spectrum,
                          double *buffer,
                          size_t capacity,
                          size_t *written);

/**
 * Eigenvalue `index` (0-based).
 *
 * # Safety
 * `spectrum` must be live and `out` valid.
 */
SbStatus sb_spectrum_get(const SbSpectrum *spectrum, size_t index, double *out);

/**
 * # Safety
 * `spectrum` must be null or a handle from this library not yet freed.
 */
void sb_spectrum_free(SbSpectrum *spectrum);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPECTRAL_BOUNDS_H */
