#ifndef KNOTLAB_H
#define KNOTLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KlStatus {
  KL_STATUS_OK = 0,
  KL_STATUS_NULL_POINTER = 1,
  KL_STATUS_INVALID_UTF8 = 2,
  KL_STATUS_PARSE = 3,
  KL_STATUS_INVALID_DIAGRAM = 4,
  KL_STATUS_NOT_A_KNOT = 5,
  KL_STATUS_CONSTRUCTION = 6,
  KL_STATUS_INCONSISTENT = 7,
  KL_STATUS_NOT_FOUND = 8,
  KL_STATUS_AMBIGUOUS = 9,
  KL_STATUS_PANIC = 10,
} KlStatus;

typedef enum KlVerdict {
  KL_VERDICT_PERSISTENTLY_LAMINAR = 0,
  KL_VERDICT_ESSENTIAL_ONLY_UNKNOWN = 1,
  KL_VERDICT_FAILS = 2,
} KlVerdict;

/**
 * Opaque diagram handle.
 */
typedef struct KlDiagram KlDiagram;

/**
 * Numeric invariants; the Alexander polynomial is read with
 * `kl_alexander`.
 */
typedef struct KlInvariants {
  uint64_t determinant;
  int64_t signature;
  uint32_t genus_lower_bound;
} KlInvariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next knotlab call on the same thread.
 */
const char *kl_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *kl_version(void);

/**
 * # Safety
 * `s` must come from a knotlab function returning `char *` and not be
 * freed twice.
 */
void kl_string_free(char *s);

/**
 * Parses PD text into a new diagram.
 *
 * # Safety
 * `pd` must be a NUL-terminated string and `out` a writable pointer.
 */
enum KlStatus kl_diagram_parse(const char *pd, struct KlDiagram **out);

/**
 * # Safety
 * `d` must be NULL or a handle from this library not yet freed.
 */
void kl_diagram_free(struct KlDiagram *d);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KlStatus kl_diagram_crossing_count(const struct KlDiagram *d, size_t *out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KlStatus kl_diagram_writhe(const struct KlDiagram *d, int32_t *out);

/**
 * Whether the diagram passes every validation rule; the failed rules are
 * reported through `kl_last_error`.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KlStatus kl_diagram_validate(const struct KlDiagram *d, bool *out);

/**
 * Canonical PD text of the diagram.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KlStatus kl_diagram_to_pd(const struct KlDiagram *d, char **out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KlStatus kl_diagram_mirror(const struct KlDiagram *d, struct KlDiagram **out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KlStatus kl_invariants(const struct KlDiagram *d, struct KlInvariants *out);

/**
 * Alexander polynomial as space-separated coefficients, constant term
 * first, e.g. `"1 -1 1"`.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KlStatus kl_alexander(const struct KlDiagram *d, char **out);

/**
 * T(2, n) for odd `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum KlStatus kl_construct_torus(int64_t n, struct KlDiagram **out);

/**
 * Twist knot with `c` crossings.
 *
 * # Safety
 * `out` must be writable.
 */
enum KlStatus kl_construct_twist(int64_t c, struct KlDiagram **out);

/**
 * 2-bridge knot from `len` continued-fraction entries.
 *
 * # Safety
 * `cf` must point to `len` readable integers and `out` be writable.
 */
enum KlStatus kl_construct_rational(const int64_t *cf, size_t len, struct KlDiagram **out);

/**
 * Twisted double: `twists` half-twists beyond the blackboard framing and
 * a clasp of sign `clasp` (+1 or -1).
 *
 * # Safety
 * `companion` must be a live handle and `out` writable.
 */
enum KlStatus kl_construct_double(const struct KlDiagram *companion,
                                  int64_t twists,
                                  int8_t clasp,
                                  struct KlDiagram **out);

/**
 * The `n`-th member of the doubled twist-knot family.
 *
 * # Safety
 * `out` must be writable.
 */
enum KlStatus kl_paper_family(uint32_t n, struct KlDiagram **out);

/**
 * Name of the unique bundled-table knot matching `d`; `mirror` is set when
 * the match is the mirror image. Returns `KL_STATUS_NOT_FOUND` or
 * `KL_STATUS_AMBIGUOUS` otherwise.
 *
 * # Safety
 * `d` must be a live handle; `name` and `mirror` writable.
 */
enum KlStatus kl_identify(const struct KlDiagram *d, char **name, bool *mirror);

/**
 * Verdict of the branched-surface certificate for a genus `genus`
 * Seifert surface.
 *
 * # Safety
 * `out` must be writable.
 */
enum KlStatus kl_bf_verdict(uint32_t genus, bool certified, enum KlVerdict *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KNOTLAB_H */
