#ifndef PLANE_FOREST_H
#define PLANE_FOREST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PfMode {
  PF_MODE_ORIENTED = 0,
  PF_MODE_MIRROR = 1,
} PfMode;

typedef enum PfStatus {
  PF_STATUS_OK = 0,
  PF_STATUS_NULL_POINTER = 1,
  PF_STATUS_INVALID_UTF8 = 2,
  PF_STATUS_MALFORMED_CODE = 3,
  PF_STATUS_LIMIT_EXCEEDED = 4,
  PF_STATUS_INVALID_ARGUMENT = 5,
  PF_STATUS_BUFFER_TOO_SMALL = 6,
  PF_STATUS_INDEX_OUT_OF_RANGE = 7,
  PF_STATUS_OVERFLOW = 8,
  PF_STATUS_HAS_CYCLE = 9,
  PF_STATUS_DISCONNECTED = 10,
  PF_STATUS_INVALID_GRAPH = 11,
  PF_STATUS_INTERNAL = 12,
} PfStatus;

/**
 * Sorted list of serialized plane trees.
 */
typedef struct PfCatalog PfCatalog;

/**
 * Canonical plane tree.
 */
typedef struct PfPlaneTree PfPlaneTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf`. Never changes
 * the stored message, so a size query followed by a read sees the same text.
 */
enum PfStatus pf_last_error(char *buf, size_t cap, size_t *needed);

/**
 * Number of rooted plane trees with `edges` edges (Catalan number).
 */
enum PfStatus pf_count_rooted(uint32_t edges, uint64_t *out);

/**
 * Number of plane tree classes with `vertices` vertices.
 */
enum PfStatus pf_count_plane(uint32_t vertices, enum PfMode mode, uint64_t *out);

/**
 * Number of flow classes with one sink and `saddles` saddles on the sphere.
 */
enum PfStatus pf_count_flows(uint32_t saddles, enum PfMode mode, uint64_t *out);

/**
 * Canonicalizes a Dyck code (bare, or `U:`/`B:` tagged) into a new tree handle.
 */
enum PfStatus pf_plane_tree_from_code(const char *code, enum PfMode mode, struct PfPlaneTree **out);

void pf_plane_tree_free(struct PfPlaneTree *tree);

/**
 * Writes the `U:<code>` / `B:<code>` line of `tree`.
 */
enum PfStatus pf_plane_tree_serialize(const struct PfPlaneTree *tree,
                                      char *buf,
                                      size_t cap,
                                      size_t *needed);

enum PfStatus pf_plane_tree_vertex_count(const struct PfPlaneTree *tree, size_t *out);

enum PfStatus pf_plane_tree_is_bicentral(const struct PfPlaneTree *tree, bool *out);

/**
 * Same class (and same mode)?
 */
enum PfStatus pf_plane_tree_equal(const struct PfPlaneTree *a,
                                  const struct PfPlaneTree *b,
                                  bool *out);

/**
 * Writes the flow record `sources=.. saddles=.. sinks=1 tree=..` for `tree`.
 */
enum PfStatus pf_flow_record(const struct PfPlaneTree *tree, char *buf, size_t cap, size_t *needed);

/**
 * Validates a separatrix graph and returns its plane tree.
 *
 * `edges` holds `edge_count` pairs of vertex ids, flattened. Edges around
 * each vertex are taken in list order.
 */
enum PfStatus pf_validate_flow_graph(size_t vertices,
                                     const uint32_t *edges,
                                     size_t edge_count,
                                     enum PfMode mode,
                                     struct PfPlaneTree **out);

/**
 * All plane tree classes with `vertices` vertices, sorted.
 */
enum PfStatus pf_catalog_new(uint32_t vertices, enum PfMode mode, struct PfCatalog **out);

enum PfStatus pf_catalog_len(const struct PfCatalog *catalog, size_t *out);

/**
 * Copies entry `index` of the catalog into `buf`.
 */
enum PfStatus pf_catalog_get(const struct PfCatalog *catalog,
                             size_t index,
                             char *buf,
                             size_t cap,
                             size_t *needed);

void pf_catalog_free(struct PfCatalog *catalog);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLANE_FOREST_H */
