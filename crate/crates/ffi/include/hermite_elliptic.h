#ifndef HERMITE_ELLIPTIC_H
#define HERMITE_ELLIPTIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HeStatus {
  HE_STATUS_OK = 0,
  HE_STATUS_DOMAIN = 1,
  HE_STATUS_RANGE = 2,
  HE_STATUS_POLE = 3,
  HE_STATUS_NOT_CONVERGED = 4,
  HE_STATUS_NULL_POINTER = 5,
  HE_STATUS_PANIC = 6,
} HeStatus;

typedef enum HeMethodChoice {
  HE_METHOD_CHOICE_AUTO = 0,
  HE_METHOD_CHOICE_SERIES = 1,
  HE_METHOD_CHOICE_QUADRATURE = 2,
} HeMethodChoice;

typedef enum HeIntegralKind {
  HE_INTEGRAL_KIND_FULL_LINE_QUADRATIC = 0,
  HE_INTEGRAL_KIND_FULL_LINE_QUADRATIC_LINEAR = 1,
  HE_INTEGRAL_KIND_HALF_LINE_MONOMIAL = 2,
  HE_INTEGRAL_KIND_HALF_LINE_GENERAL = 3,
  HE_INTEGRAL_KIND_HYPER_ELLIPTIC3 = 4,
  HE_INTEGRAL_KIND_INCOMPLETE_FINITE = 5,
} HeIntegralKind;

typedef enum HeMethod {
  HE_METHOD_CLOSED_FORM = 0,
  HE_METHOD_SERIES = 1,
  HE_METHOD_UMBRAL_SERIES = 2,
  HE_METHOD_QUADRATURE = 3,
} HeMethod;

/**
 * Opaque evaluation context.
 */
typedef struct HeContext HeContext;

/**
 * Parameters of one integral; only the fields used by `kind` are read.
 */
typedef struct HeIntegralSpec {
  enum HeIntegralKind kind;
  double a;
  double b;
  double a1;
  double a2;
  double a3;
  double nu;
  double m;
  double upper;
} HeIntegralSpec;

/**
 * Value with its diagnostics. Warning texts are available through
 * [`he_last_warnings`].
 */
typedef struct HeReport {
  double value;
  double abs_err_est;
  enum HeMethod method;
  uint64_t terms_used;
  bool converged;
  uint32_t warning_count;
} HeReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * New context with tolerance `1e-10`, 500 series terms and automatic routing.
 */
struct HeContext *he_context_new(void);

/**
 * Releases a context. Null is ignored.
 *
 * # Safety
 * `ctx` must come from [`he_context_new`] and must not be used afterwards.
 */
void he_context_free(struct HeContext *ctx);

/**
 * # Safety
 * `ctx` must be null or a live context.
 */
enum HeStatus he_context_set_tol(struct HeContext *ctx, double tol);

/**
 * # Safety
 * `ctx` must be null or a live context.
 */
enum HeStatus he_context_set_max_terms(struct HeContext *ctx, uint32_t max_terms);

/**
 * # Safety
 * `ctx` must be null or a live context.
 */
enum HeStatus he_context_set_method(struct HeContext *ctx, enum HeMethodChoice method);

/**
 * Message of the last failed call on `ctx`, or an empty string. The pointer
 * stays valid until the next call on `ctx`. Returns null for a null context.
 *
 * # Safety
 * `ctx` must be null or a live context.
 */
const char *he_last_error(const struct HeContext *ctx);

/**
 * Newline-separated warnings of the last successful report on `ctx`.
 * Same lifetime rules as [`he_last_error`].
 *
 * # Safety
 * `ctx` must be null or a live context.
 */
const char *he_last_warnings(const struct HeContext *ctx);

/**
 * Evaluates an integral through its primary route.
 *
 * # Safety
 * `ctx` must be null or a live context; `spec` must be null or readable;
 * `out` must be null or writable.
 */
enum HeStatus he_integral_eval(struct HeContext *ctx,
                               const struct HeIntegralSpec *spec,
                               struct HeReport *out);

/**
 * Evaluates an integral by direct quadrature.
 *
 * # Safety
 * As [`he_integral_eval`].
 */
enum HeStatus he_integral_quadrature(struct HeContext *ctx,
                                     const struct HeIntegralSpec *spec,
                                     struct HeReport *out);

/**
 * `Γ(x₁, x_m | ν; m)`.
 *
 * # Safety
 * `ctx` must be null or a live context; `out` must be null or writable.
 */
enum HeStatus he_gengamma2(struct HeContext *ctx,
                           double x1,
                           double xm,
                           double nu,
                           double m,
                           struct HeReport *out);

/**
 * `Γ(x₁, x₂, x₃ | ν)` by its series.
 *
 * # Safety
 * As [`he_gengamma2`].
 */
enum HeStatus he_gengamma3(struct HeContext *ctx,
                           double x1,
                           double x2,
                           double x3,
                           double nu,
                           struct HeReport *out);

/**
 * `H_n^(m)(x, y)`.
 *
 * # Safety
 * As [`he_gengamma2`], with `out` pointing to a double.
 */
enum HeStatus he_hermite_gh(struct HeContext *ctx,
                            uint32_t n,
                            uint32_t m,
                            double x,
                            double y,
                            double *out);

/**
 * `Q_n(a, b | ν, m)`.
 *
 * # Safety
 * As [`he_hermite_gh`].
 */
enum HeStatus he_q_poly(struct HeContext *ctx,
                        uint32_t n,
                        double a,
                        double b,
                        double nu,
                        uint32_t m,
                        double *out);

/**
 * `H_{−(n+1)}^(m)(x₁, x_m)`.
 *
 * # Safety
 * As [`he_hermite_gh`].
 */
enum HeStatus he_h_minus_order(struct HeContext *ctx,
                               uint32_t n,
                               double x1,
                               double xm,
                               double m,
                               double *out);

/**
 * Library version as a static NUL-terminated string.
 */
const char *he_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HERMITE_ELLIPTIC_H */
