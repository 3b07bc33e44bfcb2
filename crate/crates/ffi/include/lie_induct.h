#ifndef LIE_INDUCT_H
#define LIE_INDUCT_H

/* Generated with cbindgen:0.27.0 */

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LieStatus {
  LIE_STATUS_OK = 0,
  LIE_STATUS_NULL_POINTER = 1,
  LIE_STATUS_INVALID_UTF8 = 2,
  LIE_STATUS_PANIC = 3,
  LIE_STATUS_INVALID_TYPE = 10,
  LIE_STATUS_NOT_A_ROOT = 11,
  LIE_STATUS_NON_INTEGRAL = 12,
  LIE_STATUS_NOT_DOMINANT = 13,
  LIE_STATUS_RANK_MISMATCH = 14,
  LIE_STATUS_NOT_A_CHARACTER = 15,
  LIE_STATUS_INTERNAL_PARITY = 16,
  LIE_STATUS_IRREDUCIBILITY_MISMATCH = 17,
  LIE_STATUS_EMPTY_LEVEL = 18,
  LIE_STATUS_NON_UNIQUE_PRIMITIVE = 19,
  LIE_STATUS_BIJECTION_FAILURE = 20,
  LIE_STATUS_BAD_EMBEDDING = 21,
  LIE_STATUS_TRIVIAL_FIRST_LEVEL = 22,
  LIE_STATUS_BAD_NODE = 23,
  LIE_STATUS_OVERFLOW = 24,
  LIE_STATUS_PARSE = 25,
} LieStatus;

/**
 * Opaque root system handle.
 */
typedef struct LieRootSystem LieRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *lie_last_error(void);

/**
 * Free a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void lie_string_free(char *s);

/**
 * Build the root system of a Dynkin type such as `"E8"`.
 *
 * # Safety
 * `dynkin` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LieStatus lie_root_system_new(const char *dynkin, struct LieRootSystem **out);

/**
 * # Safety
 * `rs` must come from [`lie_root_system_new`] and not have been freed.
 */
void lie_root_system_free(struct LieRootSystem *rs);

/**
 * Rank, or 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
size_t lie_root_system_rank(const struct LieRootSystem *rs);

/**
 * Number of roots, or 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
size_t lie_root_system_num_roots(const struct LieRootSystem *rs);

/**
 * Dimension of the algebra, or 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
size_t lie_root_system_dimension(const struct LieRootSystem *rs);

/**
 * Copy the highest root's simple-root coefficients into `out[0..len]`;
 * `len` must equal the rank.
 *
 * # Safety
 * `rs` must be a live handle and `out` must point to `len` writable values.
 */
enum LieStatus lie_root_system_highest_root(const struct LieRootSystem *rs,
                                            int64_t *out,
                                            size_t len);

/**
 * Weyl dimension of `V(weight)` as a decimal string in `*out`.
 *
 * # Safety
 * `rs` must be a live handle, `weight` must point to `len` values and
 * `out` must be a valid pointer.
 */
enum LieStatus lie_weyl_dimension(const struct LieRootSystem *rs,
                                  const int64_t *weight,
                                  size_t len,
                                  char **out);

/**
 * Run one command-line invocation, for example
 * `{"report", "E9", "--format", "json"}`, without the program name.
 * Standard output and error are returned as strings; the return value is
 * the process exit code (0 success, 1 domain error, 2 usage error), or -1
 * if the arguments could not be read.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; `out` and `err`
 * must be valid pointers or null.
 */
int lie_run(size_t argc, const char *const *argv, char **out, char **err);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIE_INDUCT_H */
