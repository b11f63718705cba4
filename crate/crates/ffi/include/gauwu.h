#ifndef GAUWU_H
#define GAUWU_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GwStatus {
  GW_STATUS_OK = 0,
  GW_STATUS_NULL_POINTER = 1,
  GW_STATUS_PARSE = 2,
  GW_STATUS_NUMERICAL = 3,
  GW_STATUS_HYPOTHESIS = 4,
  GW_STATUS_IO = 5,
  GW_STATUS_OUT_OF_RANGE = 6,
  GW_STATUS_PANIC = 7,
} GwStatus;

/**
 * Square complex matrix.
 */
typedef struct GwMatrix GwMatrix;

/**
 * Homogeneous base polynomial F(x, y, t).
 */
typedef struct GwPoly GwPoly;

/**
 * Gau-Wu bounds with certified witnesses.
 */
typedef struct GwResult GwResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next `gw_*` call on the same thread.
 */
const char *gw_last_error(void);

/**
 * Builds an `n x n` matrix from row-major real and imaginary parts. `im`
 * may be null for a real matrix.
 *
 * # Safety
 * `re` (and `im` when non-null) must point to `n * n` doubles; `out` must
 * be a valid pointer.
 */
enum GwStatus gw_matrix_new(size_t n, const double *re, const double *im, struct GwMatrix **out);

/**
 * Reads a matrix file in the text or JSON format accepted by the CLI.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum GwStatus gw_matrix_from_file(const char *path, struct GwMatrix **out);

/**
 * # Safety
 * `m` must be null or a pointer returned by a matrix constructor.
 */
void gw_matrix_free(struct GwMatrix *m);

/**
 * Dimension of the matrix, 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live matrix handle.
 */
size_t gw_matrix_dim(const struct GwMatrix *m);

/**
 * Dimension of the commutant of {Re A, Im A}; 1 means unitarily irreducible.
 *
 * # Safety
 * `m` must be a live matrix handle and `out` a valid pointer.
 */
enum GwStatus gw_commutant_dimension(const struct GwMatrix *m, size_t *out);

/**
 * Computes det(x Re A + y Im A + t I).
 *
 * # Safety
 * `m` must be a live matrix handle and `out` a valid pointer.
 */
enum GwStatus gw_base_polynomial(const struct GwMatrix *m, struct GwPoly **out);

/**
 * # Safety
 * `p` must be null or a live polynomial handle.
 */
size_t gw_poly_degree(const struct GwPoly *p);

/**
 * Coefficient of x^a y^b t^c; `a + b + c` must equal the degree.
 *
 * # Safety
 * `p` must be a live polynomial handle and `out` a valid pointer.
 */
enum GwStatus gw_poly_coefficient(const struct GwPoly *p,
                                  size_t a,
                                  size_t b,
                                  size_t c,
                                  double *out);

/**
 * # Safety
 * `p` must be null or a pointer returned by `gw_base_polynomial`.
 */
void gw_poly_free(struct GwPoly *p);

/**
 * Bounds the Gau-Wu number with the default configuration, using
 * `grid_size` pencil angles (0 keeps the default).
 *
 * # Safety
 * `m` must be a live matrix handle and `out` a valid pointer.
 */
enum GwStatus gw_classify(const struct GwMatrix *m, size_t grid_size, struct GwResult **out);

/**
 * # Safety
 * `r` must be null or a live result handle.
 */
size_t gw_result_lower(const struct GwResult *r);

/**
 * # Safety
 * `r` must be null or a live result handle.
 */
size_t gw_result_upper(const struct GwResult *r);

/**
 * Exact value, or 0 when the bounds differ.
 *
 * # Safety
 * `r` must be null or a live result handle.
 */
size_t gw_result_exact(const struct GwResult *r);

/**
 * # Safety
 * `r` must be null or a live result handle.
 */
size_t gw_result_witness_count(const struct GwResult *r);

/**
 * Image <A x, x> of witness `i`.
 *
 * # Safety
 * `r` must be a live result handle; `re` and `im` valid pointers.
 */
enum GwStatus gw_result_witness_image(const struct GwResult *r, size_t i, double *re, double *im);

/**
 * # Safety
 * `r` must be null or a pointer returned by `gw_classify`.
 */
void gw_result_free(struct GwResult *r);

/**
 * Gau-Wu number of the tridiagonal Toeplitz matrix with super-diagonal `b`
 * and sub-diagonal `c`, which requires n >= 3 and |b| != |c|.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum GwStatus gw_toeplitz_k(size_t n,
                            double b_re,
                            double b_im,
                            double c_re,
                            double c_im,
                            size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAUWU_H */
