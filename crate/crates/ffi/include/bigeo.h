#ifndef BIGEO_H
#define BIGEO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. `PARSE`, `DOMAIN` and `IO` share their values with the
// command-line exit codes.
typedef enum BigeoStatus {
  BIGEO_STATUS_OK = 0,
  BIGEO_STATUS_PARSE = 2,
  BIGEO_STATUS_DOMAIN = 3,
  BIGEO_STATUS_IO = 4,
  BIGEO_STATUS_RANGE = 5,
  BIGEO_STATUS_NO_LIMIT = 6,
  BIGEO_STATUS_BRACKET = 7,
  BIGEO_STATUS_UNSUPPORTED = 8,
  BIGEO_STATUS_PRECONDITION = 9,
  BIGEO_STATUS_NULL_POINTER = 10,
  BIGEO_STATUS_INVALID_UTF8 = 11,
  BIGEO_STATUS_PANIC = 12,
} BigeoStatus;

// Opaque parsed function.
typedef struct BigeoFunction BigeoFunction;

// First G-derivative from the numeric limit. When `two_sided` is 0 only the
// one-sided logs are meaningful and `log_value` is NaN.
typedef struct BigeoGDerivative {
  int32_t two_sided;
  double log_value;
  double left_log;
  double right_log;
} BigeoGDerivative;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into this library on the same thread.
const char *bigeo_last_error(void);

// Parses `text` into a new handle stored in `*out`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum BigeoStatus bigeo_function_parse(const char *text, struct BigeoFunction **out);

// Handle for `|x|^G`: `x` on `[1, ∞)` and `1/x` on `(0, 1)`.
//
// # Safety
// `out` must be writable.
enum BigeoStatus bigeo_function_geometric_abs(struct BigeoFunction **out);

// # Safety
// `f` must be null or a handle not yet freed.
void bigeo_function_free(struct BigeoFunction *f);

// # Safety
// `f` must be a live handle and `out` writable.
enum BigeoStatus bigeo_function_eval(const struct BigeoFunction *f, double x, double *out);

// # Safety
// `f` must be a live handle and `out` writable.
enum BigeoStatus bigeo_gderiv_numeric(const struct BigeoFunction *f,
                                      double x,
                                      struct BigeoGDerivative *out);

// `ln f^G(x)` through `x·f'/f`; needs a parsed expression.
//
// # Safety
// `f` must be a live handle and `out_log` writable.
enum BigeoStatus bigeo_gderiv_analytic(const struct BigeoFunction *f, double x, double *out_log);

// `ln f^{[n]}(x)`.
//
// # Safety
// `f` must be a live handle and `out_log` writable.
enum BigeoStatus bigeo_gderiv_n(const struct BigeoFunction *f,
                                double x,
                                uint32_t n,
                                double *out_log);

// `f'(x)` recovered from the G-derivative.
//
// # Safety
// `f` must be a live handle and `out` writable.
enum BigeoStatus bigeo_ordinary_from_g(const struct BigeoFunction *f, double x, double *out);

// # Safety
// `f` must be a live handle and `out` writable.
enum BigeoStatus bigeo_exp_approx(const struct BigeoFunction *f,
                                  double a,
                                  uint32_t order,
                                  double x,
                                  double *out);

// # Safety
// `f` must be a live handle and `out` writable.
enum BigeoStatus bigeo_linear_approx(const struct BigeoFunction *f,
                                     double a,
                                     double x,
                                     double *out);

// `ln Δ^n_G f(a)` with geometric step `e^{h_log}`.
//
// # Safety
// `f` must be a live handle and `out_log` writable.
enum BigeoStatus bigeo_forward_diff(const struct BigeoFunction *f,
                                    double a,
                                    double h_log,
                                    uint32_t n,
                                    double *out_log);

// `ln ∇^n_G f(a)` with geometric step `e^{h_log}`.
//
// # Safety
// `f` must be a live handle and `out_log` writable.
enum BigeoStatus bigeo_backward_diff(const struct BigeoFunction *f,
                                     double a,
                                     double h_log,
                                     uint32_t n,
                                     double *out_log);

// Log of a positive real.
//
// # Safety
// `out_log` must be writable.
enum BigeoStatus bigeo_greal_from_value(double x, double *out_log);

// `x ⊕ y`.
//
// # Safety
// `out_log` must be writable.
enum BigeoStatus bigeo_g_add(double x_log, double y_log, double *out_log);

// `x ⊖ y`.
//
// # Safety
// `out_log` must be writable.
enum BigeoStatus bigeo_g_sub(double x_log, double y_log, double *out_log);

// `x ⊙ y`.
//
// # Safety
// `out_log` must be writable.
enum BigeoStatus bigeo_g_mul(double x_log, double y_log, double *out_log);

// `x ⊘ y`; fails with `DOMAIN` when `y` is the geometric zero.
//
// # Safety
// `out_log` must be writable.
enum BigeoStatus bigeo_g_div(double x_log, double y_log, double *out_log);

// Elasticity `E_p` and resiliency `e^{E_p}` of a demand curve.
//
// # Safety
// `f` must be a live handle; both out-pointers writable.
enum BigeoStatus bigeo_price_elasticity(const struct BigeoFunction *f,
                                        double price,
                                        double *elasticity,
                                        double *resiliency);

// Mean-value witness on `[a, b]`. `*found` is 0 when no `c` exists, in
// which case `*c` is NaN.
//
// # Safety
// `f` must be a live handle; all out-pointers writable.
enum BigeoStatus bigeo_mvt_witness(const struct BigeoFunction *f,
                                   double a,
                                   double b,
                                   double *quotient_log,
                                   double *c,
                                   int32_t *found);

// Logs of the triplet `(e^{m²+1}, e^{m²−1}, e^{2m})`: hypotenuse, opposite,
// adjacent.
//
// # Safety
// All out-pointers must be writable.
enum BigeoStatus bigeo_triplet_generate(uint64_t m, double *h_log, double *p_log, double *b_log);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIGEO_H */
