#ifndef KOSZUL_H
#define KOSZUL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define KZ_OK 0

/**
 * Independent computations disagreed.
 */
#define KZ_ERROR_INCONSISTENT 1

#define KZ_ERROR_PARSE 2

#define KZ_ERROR_AXIOM 3

#define KZ_ERROR_PRECONDITION 4

#define KZ_ERROR_NULL_ARGUMENT 5

#define KZ_ERROR_PANIC 6

typedef enum KzBackend {
  KZ_BACKEND_TOPOLOGICAL = 0,
  KZ_BACKEND_BAR = 1,
} KzBackend;

/**
 * Module whose Tor is computed.
 */
typedef enum KzModule {
  KZ_MODULE_RING = 0,
  KZ_MODULE_IDEAL = 1,
} KzModule;

/**
 * A poset with a validated interval relation and an optional ideal.
 */
typedef struct KzRelation KzRelation;

/**
 * A computed Tor table.
 */
typedef struct KzTor KzTor;

/**
 * One nonzero Tor dimension. Points are given by element indices of the
 * representatives of their point classes.
 */
typedef struct KzTorEntry {
  size_t source;
  size_t target;
  size_t homological_degree;
  size_t internal_degree;
  size_t dimension;
} KzTorEntry;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *kz_last_error_message(void);

/**
 * Parses a poset file and validates its interval relation.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
int kz_relation_parse(const char *text, struct KzRelation **out);

/**
 * One of the built-in posets (`POSET8`, `N5`, `DIAMOND`, `DBLCHAIN`,
 * `QUADNK`) with the trivial relation.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
int kz_relation_fixture(const char *name, struct KzRelation **out);

/**
 * # Safety
 * `relation` must come from this library and not be used afterwards.
 */
void kz_relation_free(struct KzRelation *relation);

/**
 * # Safety
 * Pointers must be valid.
 */
int kz_relation_num_elements(const struct KzRelation *relation, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
int kz_relation_num_classes(const struct KzRelation *relation, size_t *out);

/**
 * Name of element `index` as a newly allocated string; release it with
 * `kz_string_free`.
 *
 * # Safety
 * Pointers must be valid.
 */
int kz_relation_element_name(const struct KzRelation *relation, size_t index, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void kz_string_free(char *s);

/**
 * Koszulness of the associated graded ring, or with `use_ideal != 0` of the
 * relation's ideal. Writes 1 or 0.
 *
 * # Safety
 * Pointers must be valid.
 */
int kz_is_koszul(const struct KzRelation *relation,
                 uint64_t characteristic,
                 int use_ideal,
                 int *out);

/**
 * # Safety
 * Pointers must be valid.
 */
int kz_is_quadratic(const struct KzRelation *relation, int *out);

/**
 * Whether `P(t)Q(-t)` is the identity matrix. Writes 1 or 0.
 *
 * # Safety
 * Pointers must be valid.
 */
int kz_koszul_identity_holds(const struct KzRelation *relation, uint64_t characteristic, int *out);

/**
 * Computes a Tor table. The bar backend works in homological degrees up to
 * the number of elements.
 *
 * # Safety
 * Pointers must be valid.
 */
int kz_tor_compute(const struct KzRelation *relation,
                   uint64_t characteristic,
                   enum KzModule module,
                   enum KzBackend backend,
                   struct KzTor **out);

/**
 * # Safety
 * Pointers must be valid.
 */
int kz_tor_len(const struct KzTor *tor, size_t *out);

/**
 * Entry `index` in (source, target, i, j) order.
 *
 * # Safety
 * Pointers must be valid.
 */
int kz_tor_entry(const struct KzTor *tor, size_t index, struct KzTorEntry *out);

/**
 * # Safety
 * `tor` must come from this library and not be used afterwards.
 */
void kz_tor_free(struct KzTor *tor);

/**
 * Sequential Cohen-Macaulayness of a complex in facet-list form
 * (`"1 2; 2 3"`). Writes 1 or 0.
 *
 * # Safety
 * Pointers must be valid.
 */
int kz_complex_is_seq_cm(const char *facets, uint64_t characteristic, int *out);

/**
 * Componentwise linearity of the Stanley-Reisner ideal of the complex with
 * the given facets on vertices `1..=vertices`. Writes 1 or 0.
 *
 * # Safety
 * Pointers must be valid.
 */
int kz_stanley_reisner_is_componentwise_linear(const char *facets,
                                               size_t vertices,
                                               uint64_t characteristic,
                                               int *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KOSZUL_H */
