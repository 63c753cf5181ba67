#ifndef DIAM2COL_H
#define DIAM2COL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum D2cStatus {
  D2C_STATUS_OK = 0,
  D2C_STATUS_NULL_POINTER = 1,
  D2C_STATUS_INVALID_ARGUMENT = 2,
  D2C_STATUS_PARSE = 3,
  /**
   * The graph is outside the solver's class; the message holds the
   * violated property and a certificate.
   */
  D2C_STATUS_CLASS_VIOLATION = 4,
  D2C_STATUS_BUDGET_EXHAUSTED = 5,
  D2C_STATUS_INTERNAL = 6,
  D2C_STATUS_PANIC = 7,
} D2cStatus;

typedef enum D2cSolver {
  D2C_SOLVER_C4CS = 0,
  D2C_SOLVER_C3C7 = 1,
  D2C_SOLVER_ORACLE = 2,
} D2cSolver;

typedef struct D2cInstance D2cInstance;

typedef struct D2cResult D2cResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds an instance with full lists from `m` edges given as `2m`
 * 0-indexed endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be null when `m` is
 * 0) and `out` must be writable.
 */
enum D2cStatus d2c_instance_new(size_t n,
                                const uint32_t *edges,
                                size_t m,
                                struct D2cInstance **out);

/**
 * Parses an instance file held in a nul-terminated string.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum D2cStatus d2c_instance_parse(const char *text, struct D2cInstance **out);

/**
 * Sets the list of 0-indexed vertex `v`. Bits 0, 1 and 2 stand for
 * colors a, b and c; the mask must be nonempty.
 *
 * # Safety
 * `inst` must be a live handle.
 */
enum D2cStatus d2c_instance_set_list(struct D2cInstance *inst, size_t v, uint8_t mask);

/**
 * # Safety
 * `inst` must be a live handle or null.
 */
size_t d2c_instance_vertex_count(const struct D2cInstance *inst);

/**
 * Writes the instance in canonical file form.
 *
 * # Safety
 * `inst` must be a live handle and `out` writable.
 */
enum D2cStatus d2c_instance_write(const struct D2cInstance *inst, char **out);

/**
 * # Safety
 * `inst` must come from this library and not be freed twice.
 */
void d2c_instance_free(struct D2cInstance *inst);

/**
 * Runs a solver. `s` is read only by `D2C_SOLVER_C4CS`.
 *
 * # Safety
 * `inst` must be a live handle and `out` writable.
 */
enum D2cStatus d2c_solve(const struct D2cInstance *inst,
                         enum D2cSolver solver,
                         size_t s,
                         struct D2cResult **out);

/**
 * # Safety
 * `res` must be a live handle or null.
 */
bool d2c_result_is_yes(const struct D2cResult *res);

/**
 * Color letter of 0-indexed vertex `v`, or 0 for a NO result or a
 * vertex out of range.
 *
 * # Safety
 * `res` must be a live handle or null.
 */
char d2c_result_color(const struct D2cResult *res, size_t v);

/**
 * Number of 2-list instances solved.
 *
 * # Safety
 * `res` must be a live handle or null.
 */
uint64_t d2c_result_instances(const struct D2cResult *res);

/**
 * Whether the exhaustive fallback decided the instance.
 *
 * # Safety
 * `res` must be a live handle or null.
 */
bool d2c_result_fallback(const struct D2cResult *res);

/**
 * # Safety
 * `res` must come from this library and not be freed twice.
 */
void d2c_result_free(struct D2cResult *res);

/**
 * Checks one property (`diam2`, `c3`, `c4`, `c5`, `c7` or `cs=<k>`).
 * When it fails and `certificate` is not null, a 1-indexed certificate
 * string is stored there; otherwise null is stored.
 *
 * # Safety
 * `inst` must be a live handle, `property` a valid C string, `holds`
 * writable, and `certificate` writable or null.
 */
enum D2cStatus d2c_check_property(const struct D2cInstance *inst,
                                  const char *property,
                                  bool *holds,
                                  char **certificate);

/**
 * Generates an instance with full lists. `constraints` is a
 * comma-separated list (`c3free,c4free,c7free,csfree(k)`) or null;
 * named families ignore `n`, `p`, `seed` and `constraints`.
 *
 * # Safety
 * `family` must be a valid C string, `constraints` a valid C string or
 * null, and `out` writable.
 */
enum D2cStatus d2c_generate(const char *family,
                            size_t n,
                            double p,
                            uint64_t seed,
                            const char *constraints,
                            struct D2cInstance **out);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *d2c_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void d2c_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIAM2COL_H */
