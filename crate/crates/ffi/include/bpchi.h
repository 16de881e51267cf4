#ifndef BPCHI_H
#define BPCHI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum BpchiStatus {
  BPCHI_STATUS_OK = 0,
  BPCHI_STATUS_INVALID_INPUT = 1,
  BPCHI_STATUS_RESOURCE_LIMIT = 2,
  BPCHI_STATUS_PARSE = 3,
  BPCHI_STATUS_WELL_DEFINEDNESS = 4,
  BPCHI_STATUS_NULL_POINTER = 5,
  BPCHI_STATUS_IO = 6,
  BPCHI_STATUS_PANIC = 7,
} BpchiStatus;

/**
 * Outcome of a verification, with its JSON witness.
 */
typedef struct BpchiCertificate BpchiCertificate;

/**
 * Undirected simple graph.
 */
typedef struct BpchiGraph BpchiGraph;

/**
 * Biclique partition or t-cover of a host graph.
 */
typedef struct BpchiSystem BpchiSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on this thread.
 */
const char *bpchi_last_error(void);

/**
 * Release a string returned by this library. Null is ignored.
 */
void bpchi_string_free(char *s);

/**
 * Edgeless graph on `order` vertices.
 */
enum BpchiStatus bpchi_graph_new(size_t order, struct BpchiGraph **out);

enum BpchiStatus bpchi_graph_add_edge(struct BpchiGraph *g, size_t u, size_t v);

enum BpchiStatus bpchi_graph_has_edge(const struct BpchiGraph *g, size_t u, size_t v, bool *out);

enum BpchiStatus bpchi_graph_order(const struct BpchiGraph *g, size_t *out);

enum BpchiStatus bpchi_graph_edge_count(const struct BpchiGraph *g, size_t *out);

/**
 * Parse DIMACS text (`p edge N M`, `e u v`, 1-based).
 */
enum BpchiStatus bpchi_graph_from_dimacs(const char *dimacs, struct BpchiGraph **out);

enum BpchiStatus bpchi_graph_to_dimacs(const struct BpchiGraph *g, char **out);

void bpchi_graph_free(struct BpchiGraph *g);

/**
 * The counterexample graph G(n) on n^7 vertices; fails with
 * `ResourceLimit` when n^7 exceeds `vertex_limit`.
 */
enum BpchiStatus bpchi_build_g(size_t n, uint64_t vertex_limit, struct BpchiGraph **out);

/**
 * The explicit biclique partition of G(n).
 */
enum BpchiStatus bpchi_partition_g(size_t n, uint64_t vertex_limit, struct BpchiSystem **out);

/**
 * Parse the `p bicliques` text format.
 */
enum BpchiStatus bpchi_system_from_text(const char *s, struct BpchiSystem **out);

enum BpchiStatus bpchi_system_to_text(const struct BpchiSystem *sys, char **out);

enum BpchiStatus bpchi_system_len(const struct BpchiSystem *sys, size_t *out);

/**
 * Multiplicity bound t of the system (1 for a partition).
 */
enum BpchiStatus bpchi_system_bound(const struct BpchiSystem *sys, size_t *out);

void bpchi_system_free(struct BpchiSystem *sys);

/**
 * Check that every edge of `g` lies in between 1 and t bicliques of `sys`
 * and no non-edge lies in any. A failed check is still `Ok`; read the
 * verdict from the certificate.
 */
enum BpchiStatus bpchi_verify(const struct BpchiGraph *g,
                              const struct BpchiSystem *sys,
                              struct BpchiCertificate **out);

enum BpchiStatus bpchi_certificate_passed(const struct BpchiCertificate *cert, bool *out);

enum BpchiStatus bpchi_certificate_to_json(const struct BpchiCertificate *cert, char **out);

void bpchi_certificate_free(struct BpchiCertificate *cert);

/**
 * Exact independence number. `ResourceLimit` when the search needs more
 * than `node_budget` nodes.
 */
enum BpchiStatus bpchi_independence_number(const struct BpchiGraph *g,
                                           uint64_t node_budget,
                                           size_t *out);

/**
 * Exact chromatic number, same budget rules.
 */
enum BpchiStatus bpchi_chromatic_number(const struct BpchiGraph *g,
                                        uint64_t node_budget,
                                        size_t *out);

/**
 * `1 + sum_{s=1}^{t} 2^(s-1) C(d,s)`; `InvalidInput` if it does not fit
 * in 64 bits.
 */
enum BpchiStatus bpchi_peck_bound(uint64_t d, uint64_t t, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BPCHI_H */
