#ifndef GMDEG_H
#define GMDEG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Value written by `gmdeg_instance_conic_rank` when the fibre is degenerate.
#define GMDEG_DEGENERATE_FIBER -1

typedef enum GmdegStatus {
  GMDEG_STATUS_OK = 0,
  GMDEG_STATUS_NULL_POINTER = 1,
  GMDEG_STATUS_INVALID_UTF8 = 2,
  GMDEG_STATUS_INVALID_ARGUMENT = 3,
  // The command line could not be parsed.
  GMDEG_STATUS_USAGE = 4,
  // Reading an input file failed.
  GMDEG_STATUS_IO = 5,
  GMDEG_STATUS_INTERNAL = 6,
} GmdegStatus;

// A parsed diagram.
typedef struct GmdegDiagram GmdegDiagram;

// A sampled fibration instance.
typedef struct GmdegInstance GmdegInstance;

// A finished report.
typedef struct GmdegReport GmdegReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failing call on this thread. Valid until the next
// call on the same thread; never null.
const char *gmdeg_last_error(void);

// Library version as a static nul-terminated string.
const char *gmdeg_version(void);

// Runs a command given as `argc` arguments without the program name, for
// example `{"lattice", "sextic"}`, and stores the report in `*out`.
//
// # Safety
// `argv` must point to `argc` valid nul-terminated strings and `out` must be
// a valid pointer.
enum GmdegStatus gmdeg_run(size_t argc, const char *const *argv, struct GmdegReport **out);

// The report as JSON, owned by the handle.
//
// # Safety
// `report` must be a live handle from `gmdeg_run`.
enum GmdegStatus gmdeg_report_json(const struct GmdegReport *report, const char **out);

// Writes 1 if every check of the report passed, else 0.
//
// # Safety
// `report` must be a live handle from `gmdeg_run`.
enum GmdegStatus gmdeg_report_passed(const struct GmdegReport *report, int32_t *out);

// # Safety
// `report` must be null or a handle from `gmdeg_run` not yet freed.
void gmdeg_report_free(struct GmdegReport *report);

// Samples the instance determined by `(p, seed)`.
//
// # Safety
// `out` must be a valid pointer.
enum GmdegStatus gmdeg_instance_sample(uint32_t p, uint64_t seed, struct GmdegInstance **out);

// Rank of the conic over the point `y[0..4]` of `P(V)`, or
// `GMDEG_DEGENERATE_FIBER`.
//
// # Safety
// `inst` must be a live handle, `y` must point to 4 values and `out` must be
// a valid pointer.
enum GmdegStatus gmdeg_instance_conic_rank(const struct GmdegInstance *inst,
                                           const uint32_t *y,
                                           int32_t *out);

// # Safety
// `inst` must be null or a handle from `gmdeg_instance_sample` not yet
// freed.
void gmdeg_instance_free(struct GmdegInstance *inst);

// Parses a diagram in the text format of `gmdeg gin validate` and checks
// its conditions.
//
// # Safety
// `text` must be a nul-terminated string and `out` a valid pointer.
enum GmdegStatus gmdeg_diagram_parse(const char *text, struct GmdegDiagram **out);

// Degree and arithmetic genus of the curve described by the diagram.
//
// # Safety
// `diagram` must be a live handle and the out pointers valid.
enum GmdegStatus gmdeg_diagram_invariants(const struct GmdegDiagram *diagram,
                                          uint32_t *degree,
                                          int64_t *genus);

// # Safety
// `diagram` must be null or a handle from `gmdeg_diagram_parse` not yet
// freed.
void gmdeg_diagram_free(struct GmdegDiagram *diagram);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GMDEG_H */
