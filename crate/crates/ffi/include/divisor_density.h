#ifndef DIVISOR_DENSITY_H
#define DIVISOR_DENSITY_H

/* Generated by cbindgen from divisor-density-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Selects how a density is computed.
 */
typedef enum DdEngine {
  /**
   * Capped-valuation profile enumeration (the general engine).
   */
  DD_ENGINE_PROFILE = 0,
  /**
   * Subset inclusion-exclusion (narrow windows only).
   */
  DD_ENGINE_INCLUSION_EXCLUSION = 1,
  /**
   * Brute-force counting over one full period.
   */
  DD_ENGINE_PERIOD = 2,
} DdEngine;

/**
 * Result of every fallible call.
 */
typedef enum DdStatus {
  /**
   * Success.
   */
  DD_STATUS_OK = 0,
  /**
   * A required pointer was NULL.
   */
  DD_STATUS_NULL_POINTER = 1,
  /**
   * Domain error: invalid window, zero k, non-prime argument, ...
   */
  DD_STATUS_DOMAIN = 2,
  /**
   * A resource guard (profile states, period length, window width) tripped.
   */
  DD_STATUS_RESOURCE = 3,
  /**
   * The requested value does not exist (absent certificate).
   */
  DD_STATUS_NOT_FOUND = 4,
} DdStatus;

/**
 * Opaque exact distribution r -> delta_r(n, m).
 */
typedef struct DdDistribution DdDistribution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Crate version as a static string; do not free.
 */
const char *dd_version(void);

/**
 * Exact delta_r(n, m) by the chosen engine, written to `out_value` as a
 * `numerator/denominator` string.
 *
 * `guard` caps profile states (engine `Profile`); `period_limit` caps the
 * period length (engine `Period`). Pass 0 for either to use the defaults.
 *
 * # Safety
 * `out_value` must be a valid pointer to writable memory for one pointer.
 */
enum DdStatus dd_delta(uint64_t n,
                       uint64_t m,
                       uint64_t r,
                       enum DdEngine engine,
                       uint64_t guard,
                       uint64_t period_limit,
                       char **out_value);

/**
 * Compute the full distribution over the window (n, m) and hand back an
 * opaque handle. Pass guard = 0 for the default.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory for one pointer. The
 * returned handle must be released with [`dd_distribution_free`].
 */
enum DdStatus dd_distribution_compute(uint64_t n,
                                      uint64_t m,
                                      uint64_t guard,
                                      struct DdDistribution **out);

/**
 * Window bounds of a distribution handle.
 *
 * # Safety
 * `dist` must be a live handle from [`dd_distribution_compute`]; `out_n` and
 * `out_m` must be valid writable pointers.
 */
enum DdStatus dd_distribution_window(const struct DdDistribution *dist,
                                     uint64_t *out_n,
                                     uint64_t *out_m);

/**
 * Number of divisor counts with positive density.
 *
 * # Safety
 * `dist` must be a live handle from [`dd_distribution_compute`].
 */
uint64_t dd_distribution_support(const struct DdDistribution *dist);

/**
 * The idx-th support entry (ascending r): writes r and its exact density.
 *
 * # Safety
 * `dist` must be a live handle; `out_r` and `out_value` must be valid
 * writable pointers. The string goes to [`dd_string_free`].
 */
enum DdStatus dd_distribution_entry(const struct DdDistribution *dist,
                                    uint64_t idx,
                                    uint64_t *out_r,
                                    char **out_value);

/**
 * Exact delta_r(n, m) looked up on a handle; absent counts read as 0.
 *
 * # Safety
 * `dist` must be a live handle; `out_value` must be a valid writable pointer.
 */
enum DdStatus dd_distribution_delta(const struct DdDistribution *dist,
                                    uint64_t r,
                                    char **out_value);

/**
 * Release a distribution handle. NULL is a no-op.
 *
 * # Safety
 * `dist` must be NULL or a handle from [`dd_distribution_compute`] not yet
 * freed.
 */
void dd_distribution_free(struct DdDistribution *dist);

/**
 * Exact density of integers whose k-th smallest prime factor is the i-th
 * prime (p_0 = 2), as a fraction string.
 *
 * # Safety
 * `out_value` must be a valid writable pointer.
 */
enum DdStatus dd_kth_prime_density(uint64_t k, uint64_t i, char **out_value);

/**
 * Index from which the r-th row of the prime-divisor-count table is
 * certified non-increasing, searching up to i_max. `DD_STATUS_NOT_FOUND`
 * when no drop occurs in range.
 *
 * # Safety
 * `out_index` must be a valid writable pointer.
 */
enum DdStatus dd_monotone_tail_certificate(uint64_t r, uint64_t i_max, uint64_t *out_index);

/**
 * Free a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string produced by this library, not yet freed.
 */
void dd_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIVISOR_DENSITY_H */
