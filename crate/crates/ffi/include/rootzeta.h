/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef ROOTZETA_H
#define ROOTZETA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
enum RzStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  RZ_STATUS_OK = 0,
  RZ_STATUS_NULL_POINTER = 1,
  RZ_STATUS_INVALID_INPUT = 2,
  RZ_STATUS_DOMAIN = 3,
  RZ_STATUS_CONVERGENCE = 4,
  RZ_STATUS_HYPOTHESIS_VIOLATED = 5,
  RZ_STATUS_COSET_MISMATCH = 6,
  RZ_STATUS_ARGUMENT_OUT_OF_RANGE = 7,
  RZ_STATUS_CATALOG_MISMATCH = 8,
  RZ_STATUS_PARSE = 9,
  RZ_STATUS_IO = 10,
  /**
   * A verification ran but at least one comparison failed.
   */
  RZ_STATUS_VERIFICATION_FAILED = 11,
  RZ_STATUS_PANIC = 12,
};
#ifndef __cplusplus
typedef int32_t RzStatus;
#endif // __cplusplus

/**
 * Summation settings: precision, target tolerance and outer cutoff cap.
 */
typedef struct RzConfig RzConfig;

/**
 * An exact linear combination of zeta values and related constants.
 */
typedef struct RzExpr RzExpr;

/**
 * A real number with a rigorous absolute error bound.
 */
typedef struct RzValue RzValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the JSON documents produced by this library.
 */
uint32_t rz_schema_version(void);

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call into the library on the same thread.
 */
const char *rz_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, freed once.
 */
void rz_string_free(char *s);

/**
 * Creates a configuration. Pass 0 for any argument to use its default
 * (128 bits, 1e-12, 2^20).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
RzStatus rz_config_new(uint32_t precision_bits,
                       double target_tol,
                       uint64_t max_outer,
                       struct RzConfig **out);

/**
 * # Safety
 * `cfg` must be NULL or a handle from [`rz_config_new`], freed once.
 */
void rz_config_free(struct RzConfig *cfg);

/**
 * `zeta_2(s; G2)` for six exponents.
 *
 * # Safety
 * `cfg` must be a valid handle, `exps` must point to 6 doubles and `out`
 * must be a valid pointer.
 */
RzStatus rz_zeta_g2(const struct RzConfig *cfg, const double *exps, struct RzValue **out);

/**
 * The Weyl-symmetrized sum `S(s, I)` for `I = {subset}`, `subset` 1 or 2.
 *
 * # Safety
 * As for [`rz_zeta_g2`].
 */
RzStatus rz_s_sum_g2(const struct RzConfig *cfg,
                     uint32_t subset,
                     const double *exps,
                     struct RzValue **out);

/**
 * # Safety
 * `v` must be a valid handle.
 */
double rz_value_f64(const struct RzValue *v);

/**
 * # Safety
 * `v` must be a valid handle.
 */
double rz_value_error_bound(const struct RzValue *v);

/**
 * Decimal rendering with `digits` significant digits, or NULL if `v` is
 * NULL. Free with [`rz_string_free`].
 *
 * # Safety
 * `v` must be a valid handle.
 */
char *rz_value_decimal(const struct RzValue *v, size_t digits);

/**
 * # Safety
 * `v` must be NULL or a handle from this library, freed once.
 */
void rz_value_free(struct RzValue *v);

/**
 * Closed form of `zeta_2(2a, b, b, 2c-1, d, d; G2)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
RzStatus rz_closed_form(int64_t a, int64_t b, int64_t c, int64_t d, struct RzExpr **out);

/**
 * Right-hand side of the `I = {1}` relation at `(s, 2, 1, 1, 1, 1)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
RzStatus rz_fr01_rhs(int64_t s, struct RzExpr **out);

/**
 * Human-readable form, e.g. `1/18*zeta(2)*zeta(5) - 109/1296*zeta(7)`.
 *
 * # Safety
 * `e` must be a valid handle and `out` a valid pointer.
 */
RzStatus rz_expr_display(const struct RzExpr *e, char **out);

/**
 * JSON map from coefficient strings to symbol lists.
 *
 * # Safety
 * `e` must be a valid handle and `out` a valid pointer.
 */
RzStatus rz_expr_json(const struct RzExpr *e, char **out);

/**
 * # Safety
 * `e` and `cfg` must be valid handles and `out` a valid pointer.
 */
RzStatus rz_expr_eval(const struct RzExpr *e, const struct RzConfig *cfg, struct RzValue **out);

/**
 * 1 if the expressions are equal after deep normalization, 0 if not,
 * -1 if either is NULL.
 *
 * # Safety
 * `a` and `b` must be valid handles.
 */
int32_t rz_expr_equals(const struct RzExpr *a, const struct RzExpr *b);

/**
 * # Safety
 * `e` must be NULL or a handle from this library, freed once.
 */
void rz_expr_free(struct RzExpr *e);

/**
 * Checks every bundled catalog entry against its lattice sum at `tol`.
 * Writes a JSON array of reports to `report_json` (may be NULL) and
 * returns `VerificationFailed` if any entry fails.
 *
 * # Safety
 * `cfg` must be a valid handle; `report_json` must be NULL or valid.
 */
RzStatus rz_verify_catalog(const struct RzConfig *cfg, double tol, char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROOTZETA_H */
