#ifndef WSPAN_H
#define WSPAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WspanStatus {
  WSPAN_STATUS_OK = 0,
  WSPAN_STATUS_NULL_POINTER = 1,
  WSPAN_STATUS_INVALID_ARGUMENT = 2,
  WSPAN_STATUS_PARSE = 3,
  WSPAN_STATUS_IO = 4,
  WSPAN_STATUS_CAP_EXCEEDED = 5,
  WSPAN_STATUS_NOT_SUBGRAPH = 6,
  WSPAN_STATUS_PANIC = 7,
} WspanStatus;

// Opaque graph handle.
typedef struct WspanGraph WspanGraph;

// Opaque spanner handle.
typedef struct WspanSpanner WspanSpanner;

typedef struct WspanEdge {
  size_t u;
  size_t v;
  double w;
} WspanEdge;

// Build options. Zero (or a non-positive epsilon) means "use the
// algorithm's default"; `subset` may be null when `subset_len` is 0.
typedef struct WspanBuildParams {
  uint64_t seed;
  double epsilon;
  const size_t *subset;
  size_t subset_len;
  size_t d;
  size_t heavy;
  size_t ell;
} WspanBuildParams;

typedef struct WspanVerifySummary {
  size_t pairs_checked;
  size_t violations;
  size_t tree_violations;
  double max_excess_ratio;
} WspanVerifySummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a
// successful call. Valid until the next call on the same thread.
const char *wspan_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *wspan_version(void);

// Loads an edge-list file.
//
// # Safety
// `path` must be a NUL-terminated string and `out` a valid pointer.
enum WspanStatus wspan_graph_load(const char *path, struct WspanGraph **out);

// Builds a graph on `n` vertices from `m` edges.
//
// # Safety
// `edges` must point to `m` readable elements (or be null with `m == 0`);
// `out` must be valid.
enum WspanStatus wspan_graph_from_edges(size_t n,
                                        const struct WspanEdge *edges,
                                        size_t m,
                                        struct WspanGraph **out);

// Erdős–Rényi G(n, p) with weights uniform in `[wmin, wmax]`.
//
// # Safety
// `out` must be a valid pointer.
enum WspanStatus wspan_graph_generate_gnp(size_t n,
                                          double p,
                                          double wmin,
                                          double wmax,
                                          uint64_t seed,
                                          struct WspanGraph **out);

// # Safety
// `g` must be null or a handle from this library that was not yet freed.
void wspan_graph_free(struct WspanGraph *g);

// Vertex count, 0 for a null handle.
//
// # Safety
// `g` must be null or a live graph handle.
size_t wspan_graph_vertex_count(const struct WspanGraph *g);

// Edge count, 0 for a null handle.
//
// # Safety
// `g` must be null or a live graph handle.
size_t wspan_graph_edge_count(const struct WspanGraph *g);

// Writes the graph in edge-list format.
//
// # Safety
// `g` must be a live graph handle and `path` a NUL-terminated string.
enum WspanStatus wspan_graph_save(const struct WspanGraph *g, const char *path);

// All-default build options with the given seed.
struct WspanBuildParams wspan_build_params_default(uint64_t seed);

// Builds a spanner of `g` with the algorithm named `alg` (`6w`,
// `2w-subset`, `6w-fast`, `6wmax-fast`, `6eps-wmax`, `4w-fast`).
//
// # Safety
// `g` must be a live graph handle, `alg` a NUL-terminated string,
// `params` null or valid, and `out` valid.
enum WspanStatus wspan_build(const struct WspanGraph *g,
                             const char *alg,
                             const struct WspanBuildParams *params,
                             struct WspanSpanner **out);

// # Safety
// `s` must be null or a spanner handle that was not yet freed.
void wspan_spanner_free(struct WspanSpanner *s);

// Number of spanner edges, 0 for a null handle.
//
// # Safety
// `s` must be null or a live spanner handle.
size_t wspan_spanner_edge_count(const struct WspanSpanner *s);

// Copies the spanner's edges into `buf`. `written` receives the edge
// count; if `cap` is too small nothing is copied and the call fails with
// `WSPAN_STATUS_INVALID_ARGUMENT`.
//
// # Safety
// `s` must be a live spanner handle, `buf` must have room for `cap`
// edges (or be null with `cap == 0`), and `written` must be valid.
enum WspanStatus wspan_spanner_edges(const struct WspanSpanner *s,
                                     struct WspanEdge *buf,
                                     size_t cap,
                                     size_t *written);

// Writes the spanner in edge-list format.
//
// # Safety
// `s` must be a live spanner handle and `path` a NUL-terminated string.
enum WspanStatus wspan_spanner_save(const struct WspanSpanner *s, const char *path);

// Build report as a newly allocated JSON string, or null for a null
// handle. Release with [`wspan_string_free`].
//
// # Safety
// `s` must be null or a live spanner handle.
char *wspan_spanner_report_json(const struct WspanSpanner *s);

// # Safety
// `p` must be null or a string returned by this library.
void wspan_string_free(char *p);

// Checks the stretch of spanner `s` of graph `g` under `bound`
// (`6w`, `2w-subset`, `6wmax`, `6eps-wmax:<eps>`, `4wmax`,
// `custom:<a>:<b>`). A non-empty `subset` restricts the pairs checked.
// Violations are reported through `out`, not the status.
//
// # Safety
// Handles must be live, `bound` NUL-terminated, `subset` readable for
// `subset_len` elements (or null with length 0) and `out` valid.
enum WspanStatus wspan_verify(const struct WspanGraph *g,
                              const struct WspanSpanner *s,
                              const char *bound,
                              const size_t *subset,
                              size_t subset_len,
                              struct WspanVerifySummary *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WSPAN_H */
