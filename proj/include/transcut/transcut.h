#ifndef TRANSCUT_TRANSCUT_H
#define TRANSCUT_TRANSCUT_H

/*
 * C interface to the transcut library: cuttings of arrangements of parabola
 * translates, incidence counting, the structure pipeline and GAP fitting.
 *
 * Coordinates cross the boundary as rational strings ("3", "-7/4"). Reports
 * are returned as JSON strings allocated by the library; release them with
 * tc_string_free. Every function returning tc_status leaves a message for
 * tc_last_error on failure (per thread).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TC_API __declspec(dllexport)
#else
#define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_INVALID_ARGUMENT = 1,
  TC_ERR_PARSE = 2,
  TC_ERR_DEGENERATE = 3, /* triple point without perturbation */
  TC_ERR_UNSUPPORTED = 4,
  TC_ERR_INTERNAL = 5
} tc_status;

typedef struct tc_family tc_family;
typedef struct tc_cutting tc_cutting;
typedef struct tc_instance tc_instance;

TC_API const char* tc_version(void);
TC_API const char* tc_status_name(tc_status status);

/* Message of the last failed call on this thread, "" if none. */
TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* s);

/* Family: {"translates": [["a", "b"], ...]} (an instance file also works). */
TC_API tc_status tc_family_from_json(const char* json, tc_family** out);
TC_API void tc_family_free(tc_family* family);
TC_API size_t tc_family_size(const tc_family* family);
/* *ok = 1 iff no vertical shifts and no triple points; detail is a JSON
 * object naming the failure (may be NULL if not wanted). */
TC_API tc_status tc_family_general_position(const tc_family* family, int* ok, char** detail);
TC_API tc_status tc_arrangement_dump_json(const tc_family* family, int perturb, int with_levels,
                                          char** out_json);

typedef enum tc_q_policy { TC_Q_ADAPTIVE = 0, TC_Q_STRICT = 1, TC_Q_FIXED = 2 } tc_q_policy;

typedef struct tc_cutting_options {
  size_t r;
  int perturb;
  tc_q_policy policy;
  size_t fixed_q; /* TC_Q_FIXED only */
} tc_cutting_options;

TC_API void tc_cutting_options_init(tc_cutting_options* options);
TC_API tc_status tc_cutting_build(const tc_family* family, const tc_cutting_options* options,
                                  tc_cutting** out);
TC_API void tc_cutting_free(tc_cutting* cutting);
TC_API size_t tc_cutting_cell_count(const tc_cutting* cutting);
/* Verifies the cutting; *pass receives the overall verdict. */
TC_API tc_status tc_cutting_report_json(const tc_cutting* cutting, int simpprop, unsigned jobs,
                                        int* pass, char** out_json);
/* JSON description of one cell (boundary pieces and walls). */
TC_API tc_status tc_cutting_cell_json(const tc_cutting* cutting, size_t cell, char** out_json);
/* *cell = cell index, or -1 when the point lies on the cutting boundary. */
TC_API tc_status tc_cutting_locate(const tc_cutting* cutting, const char* x, const char* y,
                                   int64_t* cell);

/* Instance: {"points": [[x, y], ...], "s_coords": [s, ...], "translates": [...]}. */
TC_API tc_status tc_instance_from_json(const char* json, tc_instance** out);
TC_API void tc_instance_free(tc_instance* instance);
/* Incidence count, per-translate counts and the ST audit (c = 4). */
TC_API tc_status tc_incidences_json(const tc_instance* instance, int* audit_pass, char** out_json);
/* Input {"points": [...], "vectors": [...]}; ordered unit-distance pairs. */
TC_API tc_status tc_unit_distance_json(const char* json, char** out_json);
/* thresholds may be NULL for the defaults. */
TC_API tc_status tc_pipeline_run(const tc_instance* instance, const char* thresholds_json,
                                 unsigned jobs, char** out_json);

typedef struct tc_gapfit_options {
  size_t d_max;
  uint64_t size_cap; /* 0 = uncapped */
  int exact;
  const char* min_coverage; /* rational string in (0, 1]; NULL = "1" */
} tc_gapfit_options;

TC_API void tc_gapfit_options_init(tc_gapfit_options* options);
/* Input {"set": [[a, b], ...]} or anything with "translates". */
TC_API tc_status tc_gapfit_json(const char* json, const tc_gapfit_options* options,
                                char** out_json);

TC_API tc_status tc_generate_grid(uint32_t A, int tight, char** out_json);
/* Input {"vectors": [[x, y], ...], "lengths": [L, ...]}; without "vectors"
 * the first len(lengths) built-in Pythagorean unit vectors are used. Output
 * has points, empty s_coords and translates, and the vector list U and -U. */
TC_API tc_status tc_generate_unitgap(const char* json, char** out_json);
TC_API tc_status tc_generate_random(size_t n, uint64_t seed, int64_t coord_bound, char** out_json);

/* SVG drawing; with_pipeline runs the pipeline (thresholds may be NULL). */
TC_API tc_status tc_render_svg(const tc_instance* instance, int with_pipeline,
                               const char* thresholds_json, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* TRANSCUT_TRANSCUT_H */
