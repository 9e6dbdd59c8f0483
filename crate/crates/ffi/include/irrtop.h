#ifndef IRRTOP_H
#define IRRTOP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  IRRTOP_STATUS_OK = 0,
  IRRTOP_STATUS_NULL_POINTER = 1,
  IRRTOP_STATUS_INVALID_UTF8 = 2,
  IRRTOP_STATUS_INVALID_JSON = 3,
  IRRTOP_STATUS_UNKNOWN_SPACE = 4,
  IRRTOP_STATUS_UNKNOWN_POINT = 5,
  IRRTOP_STATUS_INVALID_SPACE = 6,
  IRRTOP_STATUS_NOT_OPEN = 7,
  IRRTOP_STATUS_INVALID_NET = 8,
  IRRTOP_STATUS_UNDECIDABLE_TAIL = 9,
  IRRTOP_STATUS_FUEL_EXHAUSTED = 10,
  IRRTOP_STATUS_OUT_OF_RANGE = 11,
  IRRTOP_STATUS_BAD_QUERY = 12,
  IRRTOP_STATUS_ORACLE_MISMATCH = 13,
  IRRTOP_STATUS_WRONG_KIND = 14,
  IRRTOP_STATUS_INTERNAL = 15,
} IrrtopStatus;

/**
 * A finite space or a catalog space.
 */
typedef struct IrrtopSpace IrrtopSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a finite space from `{"points", "opens"}` or `{"points", "le"}`.
 */
IrrtopStatus irrtop_space_from_json(const char *json, IrrtopSpace **out);

/**
 * Opens a catalog space: `cofinite-nat`, `omega-plus-one`, `poset-t` or
 * `rational-scott`.
 */
IrrtopStatus irrtop_space_catalog(const char *name, IrrtopSpace **out);

void irrtop_space_free(IrrtopSpace *space);

/**
 * Number of points of a finite space; `WrongKind` for catalog spaces.
 */
IrrtopStatus irrtop_space_point_count(const IrrtopSpace *space, size_t *out);

IrrtopStatus irrtop_way_below(const IrrtopSpace *space, const char *x, const char *y, bool *out);

/**
 * The property report as JSON.
 */
IrrtopStatus irrtop_properties_json(const IrrtopSpace *space, char **out);

/**
 * The derived-space trace as JSON.
 */
IrrtopStatus irrtop_derive_si_json(const IrrtopSpace *space, size_t fuel, char **out);

/**
 * Topological and Irr-convergence of a net given as JSON to the point `to`.
 */
IrrtopStatus irrtop_converge(const IrrtopSpace *space,
                             const char *net_json,
                             const char *to,
                             bool *topological,
                             bool *irr);

/**
 * The implication suite over spaces with at most `max_points` points, and
 * optionally the catalog, as JSON.
 */
IrrtopStatus irrtop_suite_json(size_t max_points, bool include_catalog, size_t fuel, char **out);

/**
 * The first small space satisfying `query` as JSON, or `null`.
 */
IrrtopStatus irrtop_counterexample_json(const char *query, size_t max_points, char **out);

void irrtop_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *irrtop_last_error(void);

/**
 * Static name of a status code.
 */
const char *irrtop_status_name(IrrtopStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IRRTOP_H */
