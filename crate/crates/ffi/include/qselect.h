#ifndef QSELECT_H
#define QSELECT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum QsStatus {
  QS_STATUS_OK = 0,
  QS_STATUS_NULL_POINTER = 1,
  QS_STATUS_INVALID_UTF8 = 2,
  QS_STATUS_INVALID_ARGUMENT = 3,
  QS_STATUS_INVALID_LOTTERY = 4,
  QS_STATUS_INVALID_THETA = 5,
  QS_STATUS_DIMENSION_MISMATCH = 6,
  QS_STATUS_NUMERICAL = 7,
  QS_STATUS_OUT_OF_RANGE = 8,
  QS_STATUS_PANIC = 99,
} QsStatus;

typedef enum QsStateKind {
  QS_STATE_KIND_CLASSICAL = 0,
  QS_STATE_KIND_NONCLASSICAL = 1,
} QsStateKind;

typedef enum QsDiagram {
  /**
   * Ellsberg urn; the scale parameter is the utility gap.
   */
  QS_DIAGRAM_ELLSBERG = 0,
  /**
   * Machina urns with beta = alpha; the scale parameter is the unit `a`.
   */
  QS_DIAGRAM_MACHINA = 1,
} QsDiagram;

typedef enum QsPattern {
  /**
   * f1 > f2 and f3 > f4.
   */
  QS_PATTERN_ONE_TWO_THREE_FOUR = 0,
  /**
   * f1 > f2 and f4 > f3.
   */
  QS_PATTERN_ONE_TWO_FOUR_THREE = 1,
  /**
   * f2 > f1 and f4 > f3.
   */
  QS_PATTERN_TWO_ONE_FOUR_THREE = 2,
  /**
   * f2 > f1 and f3 > f4.
   */
  QS_PATTERN_TWO_ONE_THREE_FOUR = 3,
  QS_PATTERN_INDIFFERENT = 4,
} QsPattern;

/**
 * Opaque lottery handle.
 */
typedef struct QsLottery QsLottery;

/**
 * Opaque phase-diagram grid.
 */
typedef struct QsRegionMap QsRegionMap;

/**
 * Opaque set of `cos Theta` values.
 */
typedef struct QsTheta QsTheta;

/**
 * Additive parts of the non-classical criterion.
 */
typedef struct QsBreakdown {
  double risk_a;
  double risk_b;
  double comparison;
  double total;
} QsBreakdown;

/**
 * One node of a phase diagram.
 */
typedef struct QsRegionCell {
  double x1;
  double x2;
  double s12;
  double s43;
  enum QsPattern pattern;
} QsRegionCell;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or `NULL` if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *qs_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *qs_version(void);

/**
 * Builds a lottery from `n` outcome labels, probabilities and utilities.
 *
 * # Safety
 * `label` must be a NUL-terminated string; `outcomes`, `p` and `u` must point
 * to `n` valid elements; `out` must be writable.
 */
enum QsStatus qs_lottery_new(const char *label,
                             const char *const *outcomes,
                             const double *p,
                             const double *u,
                             size_t n,
                             struct QsLottery **out);

/**
 * Parses a lottery from its JSON form
 * `{"label": ..., "entries": [{"outcome": ..., "p": ..., "u": ...}]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum QsStatus qs_lottery_from_json(const char *json, struct QsLottery **out);

/**
 * # Safety
 * `lottery` must be `NULL` or a handle from `qs_lottery_new` not yet freed.
 */
void qs_lottery_free(struct QsLottery *lottery);

/**
 * Number of outcomes, or 0 for `NULL`.
 *
 * # Safety
 * `lottery` must be `NULL` or a live handle.
 */
size_t qs_lottery_len(const struct QsLottery *lottery);

/**
 * # Safety
 * `lottery` must be a live handle and `out` writable.
 */
enum QsStatus qs_lottery_expected_utility(const struct QsLottery *lottery, double *out);

/**
 * An empty theta spec.
 */
struct QsTheta *qs_theta_new(void);

/**
 * The same `cos` on every pair of a `dim`-event basis.
 *
 * # Safety
 * `out` must be writable.
 */
enum QsStatus qs_theta_uniform(size_t dim, double cos, struct QsTheta **out);

/**
 * Sets `cos Theta` for the 1-based event pair `(i, j)`, in either order.
 *
 * # Safety
 * `theta` must be a live handle.
 */
enum QsStatus qs_theta_set(struct QsTheta *theta, size_t i, size_t j, double cos);

/**
 * # Safety
 * `theta` must be `NULL` or a live handle.
 */
void qs_theta_free(struct QsTheta *theta);

/**
 * Classical criterion `sum P_i Q_j cos Theta (u_i - u_j)`; positive favours `a`.
 *
 * # Safety
 * All handles must be live and `out` writable.
 */
enum QsStatus qs_criterion_classical(const struct QsLottery *a,
                                     const struct QsLottery *b,
                                     const struct QsTheta *theta,
                                     double *out);

/**
 * Non-classical criterion split into risk and comparison terms.
 *
 * # Safety
 * All handles must be live and `out` writable.
 */
enum QsStatus qs_criterion_nonclassical(const struct QsLottery *a,
                                        const struct QsLottery *b,
                                        const struct QsTheta *theta,
                                        struct QsBreakdown *out);

/**
 * The criterion evaluated as `tr(D rho)` on an explicit comparison state.
 *
 * # Safety
 * All handles must be live and `out` writable.
 */
enum QsStatus qs_criterion_trace(const struct QsLottery *a,
                                 const struct QsLottery *b,
                                 const struct QsTheta *theta,
                                 enum QsStateKind kind,
                                 double *out);

/**
 * `w_xi(x)`; no validation, NaN propagates.
 */
double qs_w_xi(double x, double xi);

double qs_goldstein_einhorn(double x, double lambda_c, double delta);

/**
 * Writes the `n` subjective probabilities of `p` into `out`.
 *
 * # Safety
 * `p` must point to `n` readable and `out` to `n` writable doubles.
 */
enum QsStatus qs_subjective_probs(const double *p, size_t n, double *out);

/**
 * Ellsberg criteria `s12` (f1 over f2) and `s43` (f4 over f3).
 *
 * # Safety
 * Out pointers must be writable.
 */
enum QsStatus qs_ellsberg(double alpha, double lambda, double delta_u, double *s12, double *s43);

/**
 * Machina criteria `s12` and `s43`.
 *
 * # Safety
 * Out pointers must be writable.
 */
enum QsStatus qs_machina(double alpha,
                         double beta,
                         double lambda,
                         double a,
                         double *s12,
                         double *s43);

/**
 * Utility of the cash equivalent of a lot paying `u_y` with probability `p`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QsStatus qs_cash_equivalent(double p, double lambda, double u_y, double *out);

/**
 * Willingness to accept (seller) and to pay (buyer).
 *
 * # Safety
 * Out pointers must be writable.
 */
enum QsStatus qs_wta_wtp(double p,
                         double u_y,
                         double lambda_seller,
                         double lambda_buyer,
                         double *wta,
                         double *wtp);

/**
 * Sweeps `alpha` over `[alpha_lo, alpha_hi]` and `lambda` over
 * `[lambda_lo, lambda_hi]`, both inclusive.
 *
 * # Safety
 * `out` must be writable.
 */
enum QsStatus qs_phase_diagram(enum QsDiagram kind,
                               double scale,
                               double alpha_lo,
                               double alpha_hi,
                               size_t alpha_steps,
                               double lambda_lo,
                               double lambda_hi,
                               size_t lambda_steps,
                               double tol,
                               struct QsRegionMap **out);

/**
 * Number of lambda rows, or 0 for `NULL`.
 *
 * # Safety
 * `map` must be `NULL` or a live handle.
 */
size_t qs_region_map_rows(const struct QsRegionMap *map);

/**
 * Number of alpha columns, or 0 for `NULL`.
 *
 * # Safety
 * `map` must be `NULL` or a live handle.
 */
size_t qs_region_map_cols(const struct QsRegionMap *map);

/**
 * # Safety
 * `map` must be a live handle and `out` writable.
 */
enum QsStatus qs_region_map_cell(const struct QsRegionMap *map,
                                 size_t row,
                                 size_t col,
                                 struct QsRegionCell *out);

/**
 * # Safety
 * `map` must be `NULL` or a live handle.
 */
void qs_region_map_free(struct QsRegionMap *map);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QSELECT_H */
