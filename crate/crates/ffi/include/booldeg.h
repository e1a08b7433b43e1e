#ifndef BOOLDEG_H
#define BOOLDEG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BooldegMeasure {
  BOOLDEG_MEASURE_DEG = 0,
  BOOLDEG_MEASURE_NDEG = 1,
  BOOLDEG_MEASURE_NDEG_NEG = 2,
  BOOLDEG_MEASURE_RDEG = 3,
  BOOLDEG_MEASURE_SDEG = 4,
  BOOLDEG_MEASURE_DECISION_TREE = 5,
} BooldegMeasure;

typedef enum BooldegStatus {
  BOOLDEG_STATUS_OK = 0,
  BOOLDEG_STATUS_NULL_POINTER = 1,
  BOOLDEG_STATUS_INVALID_ARGUMENT = 2,
  BOOLDEG_STATUS_PARSE = 3,
  BOOLDEG_STATUS_CAP_EXCEEDED = 4,
  BOOLDEG_STATUS_ARITY_MISMATCH = 5,
  BOOLDEG_STATUS_INDEX_OUT_OF_RANGE = 6,
  BOOLDEG_STATUS_INTERNAL = 7,
} BooldegStatus;

/**
 * Opaque Boolean function.
 */
typedef struct BooldegFunction BooldegFunction;

/**
 * Opaque multilinear polynomial.
 */
typedef struct BooldegPoly BooldegPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *booldeg_last_error(void);

/**
 * Builds a function from `len` bytes, one per cube point in mask order;
 * `len` must be `2^n` and each byte 0 or 1.
 *
 * # Safety
 * `bits` must point to `len` readable bytes; `out` must be writable.
 */
enum BooldegStatus booldeg_function_from_table(uintptr_t n,
                                               const uint8_t *bits,
                                               uintptr_t len,
                                               struct BooldegFunction **out);

/**
 * Parses the `n=K` / table text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BooldegStatus booldeg_function_from_text(const char *text, struct BooldegFunction **out);

/**
 * Builds a total family member. `n` or `m` equal to 0 means "not given".
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum BooldegStatus booldeg_function_from_family(const char *name,
                                                uintptr_t n,
                                                uintptr_t m,
                                                struct BooldegFunction **out);

/**
 * # Safety
 * `f` must be NULL or a handle from this library not yet freed.
 */
void booldeg_function_free(struct BooldegFunction *f);

/**
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BooldegStatus booldeg_function_arity(const struct BooldegFunction *f, uintptr_t *out);

/**
 * Computes one degree-type measure.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BooldegStatus booldeg_degree(const struct BooldegFunction *f,
                                  enum BooldegMeasure measure,
                                  uintptr_t *out);

/**
 * `bs_x(f)` at the point whose bit `i` is `x_{i+1}`.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BooldegStatus booldeg_block_sensitivity(const struct BooldegFunction *f,
                                             uint32_t point,
                                             uintptr_t *out);

/**
 * Minimum-degree witness as polynomial text (`deg`, `ndeg`, `ndeg_neg`,
 * `sdeg`; `rdeg` gives `(p) / (q)`).
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable. Free the string with
 * [`booldeg_string_free`].
 */
enum BooldegStatus booldeg_witness(const struct BooldegFunction *f,
                                   enum BooldegMeasure measure,
                                   char **out);

/**
 * The full measure report as JSON.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BooldegStatus booldeg_measures_json(const struct BooldegFunction *f, char **out);

/**
 * The hitting-set decision tree in nested text form and its depth.
 *
 * # Safety
 * `f` must be a live handle; both out-pointers must be writable.
 */
enum BooldegStatus booldeg_tree(const struct BooldegFunction *f,
                                char **out_tree,
                                uintptr_t *out_depth);

/**
 * Parses polynomial text. A negative `arity` infers it from the highest
 * variable.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BooldegStatus booldeg_poly_parse(const char *text, int arity, struct BooldegPoly **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void booldeg_poly_free(struct BooldegPoly *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BooldegStatus booldeg_poly_to_string(const struct BooldegPoly *p, char **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BooldegStatus booldeg_poly_degree(const struct BooldegPoly *p, uintptr_t *out);

/**
 * Exact value at a cube point, written as `"num/den"`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BooldegStatus booldeg_poly_evaluate(const struct BooldegPoly *p, uint32_t point, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void booldeg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOOLDEG_H */
