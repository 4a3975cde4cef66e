#ifndef HECKE_G5_H
#define HECKE_G5_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum H5Status {
  H5_STATUS_OK = 0,
  H5_STATUS_NULL_POINTER,
  H5_STATUS_INVALID_UTF8,
  /**
   * A result does not fit the fixed-width output type.
   */
  H5_STATUS_OVERFLOW,
  H5_STATUS_PANIC,
  H5_STATUS_SYNTAX_ERROR,
  H5_STATUS_DIVISION_BY_ZERO,
  H5_STATUS_NOT_A_UNIT,
  H5_STATUS_BOTH_ZERO,
  H5_STATUS_ZERO_INPUT,
  H5_STATUS_FACTOR_CAP_EXCEEDED,
  H5_STATUS_NOT_COPRIME,
  H5_STATUS_ITERATION_CAP_EXCEEDED,
  H5_STATUS_BAD_DETERMINANT,
  H5_STATUS_UNIT_MODULUS,
  H5_STATUS_BOUND_EXCEEDED,
  H5_STATUS_INTEGRITY_ERROR,
  H5_STATUS_BAD_RANGE,
  H5_STATUS_NOT_REDUCED,
  H5_STATUS_NOT_A_GROUP,
} H5Status;

/**
 * Element `a + bλ` of `Z[λ]`.
 */
typedef struct H5Elt H5Elt;

/**
 * 2x2 matrix of determinant 1 over `Z[λ]`.
 */
typedef struct H5Matrix H5Matrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or null if none.
 * The pointer stays valid until the next failing call on this thread.
 */
const char *h5_last_error_message(void);

/**
 * Stable lowercase name of a status code. Never null.
 */
const char *h5_status_name(enum H5Status status);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void h5_string_free(char *s);

/**
 * Creates `a + bλ`. Never fails.
 */
struct H5Elt *h5_elt_new(int64_t a, int64_t b);

/**
 * Parses an expression such as `"12*L+7"` or `"(2*L-1)^2"`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum H5Status h5_elt_parse(const char *text, struct H5Elt **out);

/**
 * # Safety
 * `x` must come from this library and not have been freed. Null is ignored.
 */
void h5_elt_free(struct H5Elt *x);

/**
 * Text form of `x`, or null if `x` is null. Free with [`h5_string_free`].
 *
 * # Safety
 * `x` must be null or a live handle.
 */
char *h5_elt_to_string(const struct H5Elt *x);

/**
 * Writes the coordinates of `x = a + bλ`.
 *
 * # Safety
 * `x` must be a live handle; `a` and `b` must be writable.
 */
enum H5Status h5_elt_coords(const struct H5Elt *x, int64_t *a, int64_t *b);

/**
 * Writes the norm `a² + ab − b²`.
 *
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
enum H5Status h5_elt_norm(const struct H5Elt *x, int64_t *out);

/**
 * Builds `[[a, b], [c, d]]`, failing unless the determinant is 1.
 *
 * # Safety
 * The four entries must be live handles; `out` must be writable.
 */
enum H5Status h5_matrix_new(const struct H5Elt *a,
                            const struct H5Elt *b,
                            const struct H5Elt *c,
                            const struct H5Elt *d,
                            struct H5Matrix **out);

/**
 * # Safety
 * `m` must come from this library and not have been freed. Null is ignored.
 */
void h5_matrix_free(struct H5Matrix *m);

/**
 * Text form of `m`, or null if `m` is null. Free with [`h5_string_free`].
 *
 * # Safety
 * `m` must be null or a live handle.
 */
char *h5_matrix_to_string(const struct H5Matrix *m);

/**
 * Prime factorization of `x` as JSON. Free with [`h5_string_free`].
 *
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
enum H5Status h5_factor_json(const struct H5Elt *x, char **out);

/**
 * Reduced factor of `num/den`: writes `e` and the reduced form
 * `num·λᵉ / den·λᵉ`. Either form pointer may be null to skip it.
 *
 * # Safety
 * `num` and `den` must be live handles; `e` must be writable.
 */
enum H5Status h5_reduce(const struct H5Elt *num,
                        const struct H5Elt *den,
                        int64_t *e,
                        struct H5Elt **reduced_num,
                        struct H5Elt **reduced_den);

/**
 * Index of `G0(τ)` in the Hecke group.
 *
 * # Safety
 * `tau` must be a live handle; `out` must be writable.
 */
enum H5Status h5_index(const struct H5Elt *tau, uint64_t *out);

/**
 * Normalizer of `G0(τ)`: writes the generator of `τ/h` and `h`.
 *
 * # Safety
 * `tau` must be a live handle; `modulus` and `h` must be writable.
 */
enum H5Status h5_normalizer(const struct H5Elt *tau, struct H5Elt **modulus, uint32_t *h);

/**
 * Whether `m` lies in `G0(τ)`.
 *
 * # Safety
 * `m` and `tau` must be live handles; `out` must be writable.
 */
enum H5Status h5_g0_contains(const struct H5Matrix *m, const struct H5Elt *tau, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HECKE_G5_H */
