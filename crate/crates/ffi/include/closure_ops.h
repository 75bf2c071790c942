#ifndef CLOSURE_OPS_H
#define CLOSURE_OPS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result of every fallible call.
typedef enum CoStatus {
  CO_STATUS_OK = 0,
  // A mathematical check failed; a report is still produced.
  CO_STATUS_CHECK_FAILED = 1,
  // Malformed JSON, unknown names or otherwise unusable input.
  CO_STATUS_INVALID_INPUT = 2,
  // A required pointer argument was null.
  CO_STATUS_NULL_POINTER = 3,
  // Unexpected internal failure.
  CO_STATUS_INTERNAL = 4,
} CoStatus;

typedef enum CoDecomposition {
  CO_DECOMPOSITION_WEAK_ORDERS = 0,
  CO_DECOMPOSITION_BINARY = 1,
} CoDecomposition;

typedef enum CoLabeling {
  CO_LABELING_MINIMAL = 0,
  CO_LABELING_CANONICAL = 1,
} CoLabeling;

// A closure operator.
typedef struct CoOperator CoOperator;

// A utility function over menus.
typedef struct CoPreference CoPreference;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into the library on the same thread.
const char *co_last_error(void);

// Library version as a static string.
const char *co_version(void);

// Releases a string returned by the library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void co_string_free(char *s);

// Builds an operator from a topology (`closed_sets`) or table (`map`)
// document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum CoStatus co_operator_from_json(const char *json, struct CoOperator **out);

// Builds the binary-classifier operator of a labeling document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum CoStatus co_operator_from_labels_json(const char *json, struct CoOperator **out);

// Builds the operator generated by a list of weak orders and binary
// classifiers.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum CoStatus co_operator_from_generators_json(const char *json, struct CoOperator **out);

// # Safety
// `op` must be null or a handle from this library not yet freed.
void co_operator_free(struct CoOperator *op);

// Number of elements in the ground set.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_element_count(const struct CoOperator *op, size_t *out);

// Closure of a subset given as a bitmask over element positions.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_apply(const struct CoOperator *op, uint32_t subset, uint32_t *out);

// Minimum number of weak orders that generate the operator.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_mnwo(const struct CoOperator *op, size_t *out);

// Minimum number of binary classifiers that generate the operator.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_mnbc(const struct CoOperator *op, size_t *out);

// Closed sets as a topology document.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_topology_json(const struct CoOperator *op, char **out);

// Complexity profile with witnesses.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_complexity_json(const struct CoOperator *op, char **out);

// A minimum generating family as a generators document.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_decompose_json(const struct CoOperator *op,
                                         enum CoDecomposition kind,
                                         char **out);

// A labeling whose classifier operator is `op`.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_labels_json(const struct CoOperator *op,
                                      enum CoLabeling kind,
                                      char **out);

// Nonzero Möbius values of the closed sets under inclusion.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_mobius_json(const struct CoOperator *op, char **out);

// Hasse diagram of the closed sets, as JSON or (with `dot`) Graphviz.
//
// # Safety
// `op` must be a live handle and `out` writable.
enum CoStatus co_operator_hasse(const struct CoOperator *op, bool dot, char **out);

// Checks the closure axioms on a table document and writes the
// validation report.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum CoStatus co_validate_table_json(const char *json, char **out);

// Builds a preference from a preference document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum CoStatus co_preference_from_json(const char *json, struct CoPreference **out);

// # Safety
// `pref` must be null or a handle from this library not yet freed.
void co_preference_free(struct CoPreference *pref);

// Kreps representation, or the axiom report if the preference fails the
// axioms.
//
// # Safety
// `pref` must be a live handle and `out` writable.
enum CoStatus co_preference_kreps_json(const struct CoPreference *pref, char **out);

// Additive representation with respect to `op`, or the identity when
// `op` is null.
//
// # Safety
// `pref` must be a live handle, `op` null or a live handle, and `out`
// writable.
enum CoStatus co_preference_additive_json(const struct CoPreference *pref,
                                          const struct CoOperator *op,
                                          char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLOSURE_OPS_H */
