#ifndef TWISTFLOW_H
#define TWISTFLOW_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum TfStatus {
  TF_STATUS_OK = 0,
  // Malformed manifold expression.
  TF_STATUS_PARSE = 1,
  // The quadruple is not a flow invariant.
  TF_STATUS_INVALID_INVARIANT = 2,
  // Parameters violate a coprimality or range condition.
  TF_STATUS_INVALID_ARGUMENT = 3,
  TF_STATUS_NULL_POINTER = 4,
  // Input string is not UTF-8.
  TF_STATUS_UTF8 = 5,
  TF_STATUS_OVERFLOW = 6,
  TF_STATUS_NOT_A_LENS = 7,
  // Internal panic; the library state is unaffected.
  TF_STATUS_PANIC = 8,
} TfStatus;

// The classification of one flow invariant.
typedef struct TfClassification TfClassification;

// A canonical closed 3-manifold.
typedef struct TfManifold TfManifold;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Classifies `(l1, m1, l2, m2)`. On success `*out` owns a new handle.
//
// # Safety
// `out` must be valid for writes.
enum TfStatus tf_classify(int64_t l1,
                          int64_t m1,
                          int64_t l2,
                          int64_t m2,
                          struct TfClassification **out);

// Case number 1..7, or 0 for a null handle.
//
// # Safety
// `c` must be null or a live handle.
uint8_t tf_classification_case(const struct TfClassification *c);

// The classified manifold as a new handle.
//
// # Safety
// `c` must be a live handle and `out` valid for writes.
enum TfStatus tf_classification_manifold(const struct TfClassification *c, struct TfManifold **out);

// The classification as JSON with sorted keys.
//
// # Safety
// `c` must be a live handle and `out` valid for writes.
enum TfStatus tf_classification_json(const struct TfClassification *c, char **out);

// # Safety
// `c` must be null or a handle not yet freed.
void tf_classification_free(struct TfClassification *c);

// Parses and canonicalizes a manifold expression such as `L(5,2) # RP3`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` valid for writes.
enum TfStatus tf_manifold_parse(const char *text, struct TfManifold **out);

// `L(p,q)` in canonical form; `p` in {0, 1, 2} gives S2xS1, S3, RP3.
//
// # Safety
// `out` must be valid for writes.
enum TfStatus tf_lens_canonical(int64_t p, int64_t q, struct TfManifold **out);

// Canonical text form.
//
// # Safety
// `m` must be a live handle and `out` valid for writes.
enum TfStatus tf_manifold_render(const struct TfManifold *m, char **out);

// Homeomorphism test. A nonzero `unoriented` also identifies `L(p,q)` with
// `L(p,q')` when `q·q' ≡ ±1 (mod p)`.
//
// # Safety
// `a` and `b` must be live handles and `out` valid for writes.
enum TfStatus tf_manifold_homeomorphic(const struct TfManifold *a,
                                       const struct TfManifold *b,
                                       bool unoriented,
                                       bool *out);

// First homology as text, e.g. `Z + Z/2`.
//
// # Safety
// `m` must be a live handle and `out` valid for writes.
enum TfStatus tf_manifold_h1(const struct TfManifold *m, char **out);

// # Safety
// `m` must be a live handle and `out` valid for writes.
enum TfStatus tf_manifold_is_prime(const struct TfManifold *m, bool *out);

// # Safety
// `m` must be null or a handle not yet freed.
void tf_manifold_free(struct TfManifold *m);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void tf_string_free(char *s);

// Message for the last failed call on this thread, or null after a
// successful call. Valid until the next call on the same thread.
const char *tf_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWISTFLOW_H */
