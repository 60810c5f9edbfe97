#ifndef AXICOVER_H
#define AXICOVER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Values 0 to 3 match the exit codes of the command-line tool.
 */
typedef enum AxStatus {
  AX_STATUS_OK = 0,
  /**
   * A negative decision: not representable, or verification failed.
   */
  AX_STATUS_REJECTED = 1,
  AX_STATUS_INVALID_INPUT = 2,
  AX_STATUS_RESOURCE_CAP = 3,
  AX_STATUS_NULL_POINTER = 4,
  AX_STATUS_INTERNAL = 5,
} AxStatus;

/**
 * Opaque hypergraph handle.
 */
typedef struct AxHypergraph AxHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *ax_version(void);

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *ax_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed at most once.
 */
void ax_string_free(char *s);

/**
 * Parses a hypergraph document into a new handle.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum AxStatus ax_hypergraph_parse(const char *json, struct AxHypergraph **out);

/**
 * # Safety
 * `h` must be null or a handle from this library, freed at most once.
 */
void ax_hypergraph_free(struct AxHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle; each out pointer may be null to skip it.
 */
enum AxStatus ax_hypergraph_counts(const struct AxHypergraph *h,
                                   size_t *parts,
                                   size_t *vertices,
                                   size_t *edges);

/**
 * Serializes the hypergraph document.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum AxStatus ax_hypergraph_to_json(const struct AxHypergraph *h, char **out);

/**
 * Decides representability. On `AX_STATUS_OK` `out` receives the
 * representation; on `AX_STATUS_REJECTED` it receives the witness.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum AxStatus ax_recognize(const struct AxHypergraph *h,
                           size_t d,
                           size_t ell,
                           bool enumerate,
                           char **out);

/**
 * Vertex separability under the fixed-mode labeling.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum AxStatus ax_is_vertex_separable(const struct AxHypergraph *h, size_t d, size_t ell, bool *out);

/**
 * Edge separability under the fixed-mode labeling.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum AxStatus ax_is_edge_separable(const struct AxHypergraph *h, size_t d, size_t ell, bool *out);

/**
 * Builds the incidence hypergraph of a point-set document. `out_rep` may be
 * null; otherwise it receives the point set's own representation.
 *
 * # Safety
 * `points_json` must be a valid C string and `out` a valid pointer.
 */
enum AxStatus ax_from_points(const char *points_json, struct AxHypergraph **out, char **out_rep);

/**
 * Verifies a representation document. Returns `AX_STATUS_REJECTED` with
 * the violation as the last error message when it does not hold.
 *
 * # Safety
 * `h` must be a live handle and `rep_json` a valid C string.
 */
enum AxStatus ax_verify(const struct AxHypergraph *h, const char *rep_json);

/**
 * Builds the matching instance of a simple-graph document.
 *
 * # Safety
 * `graph_json` must be a valid C string and `out` a valid pointer.
 */
enum AxStatus ax_reduce_is(const char *graph_json, char **out);

/**
 * Exact maximum matching of the hypergraph.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum AxStatus ax_max_matching(const struct AxHypergraph *h, size_t *out);

/**
 * Exact independence number of a simple-graph document.
 *
 * # Safety
 * `graph_json` must be a valid C string and `out` a valid pointer.
 */
enum AxStatus ax_max_independent_set(const char *graph_json, size_t *out);

/**
 * Projects a line representation of `h` to a planar instance. With a null
 * `rep_json` the representation is recognized with the fixed labeling.
 *
 * # Safety
 * `h` must be a live handle, `rep_json` null or a valid C string, and `out`
 * a valid pointer.
 */
enum AxStatus ax_project(const struct AxHypergraph *h,
                         const char *rep_json,
                         uint64_t seed,
                         char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AXICOVER_H */
