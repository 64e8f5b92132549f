#ifndef V12_H
#define V12_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum V12Status {
  V12_STATUS_OK = 0,
  V12_STATUS_NULL_POINTER = 1,
  V12_STATUS_INVALID_UTF8 = 2,
  V12_STATUS_SYNTAX = 3,
  V12_STATUS_UNKNOWN_NAME = 4,
  V12_STATUS_INVALID_INPUT = 5,
  V12_STATUS_COMPUTATION = 6,
  V12_STATUS_BUFFER_TOO_SMALL = 7,
  V12_STATUS_PANIC = 8,
} V12Status;

/**
 * A homogeneous bundle on the spinor tenfold.
 */
typedef struct V12Bundle V12Bundle;

/**
 * The outcome of a verify suite.
 */
typedef struct V12Report V12Report;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Valid until the next
 * call into this library on the same thread.
 */
const char *v12_last_error(void);

/**
 * Static name of a status code.
 */
const char *v12_status_name(enum V12Status status);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void v12_string_free(char *s);

/**
 * Parses a bundle expression such as `dual(U)*U(-1)`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string; `out` must be writable.
 */
enum V12Status v12_bundle_parse(const char *expr, struct V12Bundle **out);

/**
 * Releases a bundle. NULL is ignored.
 *
 * # Safety
 * `b` must come from this library and not have been freed.
 */
void v12_bundle_free(struct V12Bundle *b);

/**
 * A new bundle `b(k)`.
 *
 * # Safety
 * `b` must be a live bundle; `out` must be writable.
 */
enum V12Status v12_bundle_twist(const struct V12Bundle *b, int64_t k, struct V12Bundle **out);

/**
 * Rank of the bundle.
 *
 * # Safety
 * `b` must be a live bundle; `rank` must be writable.
 */
enum V12Status v12_bundle_rank(const struct V12Bundle *b, uint64_t *rank);

/**
 * Decomposition of the bundle as text, e.g. `E(0,0,0,0,-1)`.
 *
 * # Safety
 * `b` must be a live bundle; `out` must be writable.
 */
enum V12Status v12_bundle_describe(const struct V12Bundle *b, char **out);

/**
 * Writes dim H^i(Σ, b) into `dims[i]` for i < len. Fails with
 * `BufferTooSmall` when a nonzero degree does not fit; 11 entries always do.
 *
 * # Safety
 * `b` must be a live bundle; `dims` must have room for `len` values.
 */
enum V12Status v12_bundle_cohomology(const struct V12Bundle *b, uint64_t *dims, size_t len);

/**
 * Cohomology of the bundle on the generic linear section of codimension
 * `codim`. When `*exact` is 0 the dimensions are upper bounds and only
 * `*euler` is certain.
 *
 * # Safety
 * `b` must be a live bundle; `dims` must have room for `len` values;
 * `exact` and `euler` must be writable.
 */
enum V12Status v12_section_cohomology(const struct V12Bundle *b,
                                      uint32_t codim,
                                      uint64_t *dims,
                                      size_t len,
                                      int32_t *exact,
                                      int64_t *euler);

/**
 * Runs the command-line interface on `argv[0..argc]` (without the program
 * name), capturing both streams.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; the out-pointers must be
 * writable.
 */
enum V12Status v12_cli(const char *const *argv,
                       size_t argc,
                       int32_t *exit_code,
                       char **out,
                       char **err);

/**
 * Chern data of `E1`, `E2`, `U-plus`, `eta2` or `gamma2` as JSON.
 *
 * # Safety
 * `target` must be a NUL-terminated string; `out` must be writable.
 */
enum V12Status v12_chern_json(const char *target, char **out);

/**
 * Runs a verify suite (`all`, `bbw`, `koszul`, `cherns`, `sod`, `conics`).
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `out` must be writable.
 */
enum V12Status v12_verify(const char *suite, struct V12Report **out);

/**
 * Releases a report. NULL is ignored.
 *
 * # Safety
 * `r` must come from this library and not have been freed.
 */
void v12_report_free(struct V12Report *r);

/**
 * Whether every check passed (1) or not (0).
 *
 * # Safety
 * `r` must be a live report; `pass` must be writable.
 */
enum V12Status v12_report_pass(const struct V12Report *r, int32_t *pass);

/**
 * Number of checks, and how many passed.
 *
 * # Safety
 * `r` must be a live report; `total` and `passed` must be writable.
 */
enum V12Status v12_report_counts(const struct V12Report *r, size_t *total, size_t *passed);

/**
 * The report as JSON.
 *
 * # Safety
 * `r` must be a live report; `out` must be writable.
 */
enum V12Status v12_report_json(const struct V12Report *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* V12_H */
