/*
 * C interface to the conducting-pattern engine.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a baton_status; on failure the calling
 * thread's baton_last_error() describes what went wrong. Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with baton_string_free().
 */
#ifndef BATON_H
#define BATON_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BATON_BUILDING_LIBRARY)
#    define BATON_API __declspec(dllexport)
#  else
#    define BATON_API __declspec(dllimport)
#  endif
#else
#  define BATON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum baton_status {
    BATON_OK = 0,
    BATON_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value */
    BATON_ERR_DOMAIN = 2,           /* value outside an operation's domain */
    BATON_ERR_CONFIGURATION = 3,    /* e.g. pattern and timing beat counts differ */
    BATON_ERR_DOCUMENT = 4,         /* pattern document rejected */
    BATON_ERR_SERVICE = 5,          /* could not bind or run the HTTP service */
    BATON_ERR_INTERNAL = 6
} baton_status;

typedef enum baton_role { BATON_ROLE_PREPARATION = 0, BATON_ROLE_ICTUS = 1 } baton_role;

typedef enum baton_sample_format {
    BATON_FORMAT_TABLE = 0,     /* comma-separated with header row */
    BATON_FORMAT_STRUCTURED = 1 /* JSON array of objects */
} baton_sample_format;

typedef enum baton_report_format {
    BATON_REPORT_TEXT = 0,
    BATON_REPORT_JSON = 1
} baton_report_format;

typedef struct baton_vec2 {
    double x;
    double y;
} baton_vec2;

typedef struct baton_anchor {
    baton_role role;
    int beat;
    double x;
    double y;
    double roundness;
} baton_anchor;

typedef struct baton_render_options {
    int width;
    int height;
    double margin;
    double stroke_width;
    int show_anchors;
    int show_labels;
    int show_spatial_speed;
    int samples_per_segment;
} baton_render_options;

typedef struct baton_pattern baton_pattern;
typedef struct baton_timing baton_timing;

BATON_API const char* baton_version(void);
BATON_API const char* baton_last_error(void);
/* Stable tag for the last BATON_ERR_DOCUMENT ("anchor_count", ...), else "". */
BATON_API const char* baton_last_error_code(void);
BATON_API void baton_string_free(char* s);

/* Patterns (a pattern handle carries the whole document, metadata included). */
BATON_API baton_status baton_pattern_default(int beats, baton_pattern** out);
BATON_API baton_status baton_pattern_parse(const char* text, size_t length, int lenient,
                                           baton_pattern** out);
BATON_API void baton_pattern_free(baton_pattern* pattern);
BATON_API baton_status baton_pattern_serialize(const baton_pattern* pattern, char** out);
BATON_API int baton_pattern_beats(const baton_pattern* pattern);
BATON_API baton_status baton_pattern_anchor(const baton_pattern* pattern, size_t index,
                                            baton_anchor* out);
BATON_API baton_status baton_pattern_reflect(const baton_pattern* pattern, baton_pattern** out);
BATON_API baton_status baton_pattern_validate(const baton_pattern* pattern, double tolerance,
                                              baton_report_format format, size_t* error_count,
                                              size_t* warning_count, char** report);

BATON_API baton_status baton_curve_point(const baton_pattern* pattern, double s,
                                         baton_vec2* out);
BATON_API baton_status baton_curve_tangent(const baton_pattern* pattern, double s,
                                           baton_vec2* out);

/* Timing. */
BATON_API baton_status baton_timing_create(int beats, double bpm, double beta,
                                           baton_timing** out);
BATON_API void baton_timing_free(baton_timing* timing);
BATON_API double baton_timing_cycle_duration(const baton_timing* timing);
BATON_API double baton_timing_segment_duration(const baton_timing* timing);
BATON_API baton_status baton_timing_phase(const baton_timing* timing, double t, double* out);
BATON_API baton_status baton_timing_phase_rate(const baton_timing* timing, double t,
                                               double* out);

/* Motion. */
BATON_API baton_status baton_position(const baton_pattern* pattern, const baton_timing* timing,
                                      double t, baton_vec2* out);
BATON_API baton_status baton_velocity(const baton_pattern* pattern, const baton_timing* timing,
                                      double t, baton_vec2* out);
/* Samples over [t0, t1] at playback times; engine time is t + start_offset. */
BATON_API baton_status baton_sample(const baton_pattern* pattern, const baton_timing* timing,
                                    double t0, double t1, int count, double start_offset,
                                    baton_sample_format format, char** out);

/* Rendering (SVG). */
BATON_API void baton_render_options_init(baton_render_options* opts);
BATON_API baton_status baton_render_curve(const baton_pattern* pattern,
                                          const baton_render_options* opts, char** svg);
BATON_API baton_status baton_render_speed_plot(const baton_pattern* pattern,
                                               const baton_timing* timing,
                                               const baton_render_options* opts, char** svg);

/* Runs the HTTP playback service until the process is stopped. */
BATON_API baton_status baton_serve(const char* host, int port);

#ifdef __cplusplus
}
#endif

#endif /* BATON_H */
