#ifndef MATHPLAY_H
#define MATHPLAY_H

/* C interface to the mathplay library. Objects are opaque handles released
 * with their _free function; strings returned through char** are owned by
 * the caller and released with mp_string_free. Every fallible call returns
 * an mp_status and leaves a message for mp_last_error on failure. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MP_API __declspec(dllexport)
#else
#define MP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_INVALID_ARGUMENT = 1,
  MP_ILLEGAL_MOVE = 2,
  MP_OVERFLOW = 3,
  MP_PARSE_ERROR = 4,
  MP_DUPLICATE_RULE = 5,
  MP_MISSING_AXIOM = 6,
  MP_OUTPUT_TOO_LARGE = 7,
  MP_UNBALANCED_POP = 8,
  MP_INVALID_SYSTEM = 9,
  MP_INVALID_GIVENS = 10,
  MP_ESTIMATE_UNDEFINED = 11,
  MP_NOT_SYMMETRIC = 12,
  MP_IO = 13,
  MP_NULL_POINTER = 14,
  MP_INTERNAL = 15
} mp_status;

MP_API const char* mp_status_name(mp_status status);
/* Message for the most recent failure on this thread; "" after success. */
MP_API const char* mp_last_error(void);
MP_API void mp_string_free(char* s);

/* ---- games ---- */

typedef struct mp_analysis mp_analysis;

typedef enum mp_outcome { MP_FIRST = 1, MP_SECOND = 2 } mp_outcome;

MP_API mp_status mp_nim_analyze(const uint64_t* heaps, size_t count, mp_analysis** out);
/* Position with `remaining` still to add before reaching `target`. */
MP_API mp_status mp_subtraction_analyze(uint64_t target, const uint64_t* moves, size_t move_count,
                                        uint64_t remaining, mp_analysis** out);
MP_API mp_outcome mp_analysis_outcome(const mp_analysis* a);
MP_API uint64_t mp_analysis_grundy(const mp_analysis* a);
MP_API size_t mp_analysis_move_count(const mp_analysis* a);
/* heap is 0 for subtraction games. */
MP_API mp_status mp_analysis_move(const mp_analysis* a, size_t index, size_t* heap, uint64_t* take);
MP_API mp_status mp_analysis_to_json(const mp_analysis* a, char** out);
MP_API void mp_analysis_free(mp_analysis* a);

/* ---- counting ---- */

typedef enum mp_count_kind { MP_COUNT_SQUARES = 0, MP_COUNT_ROOKS = 1, MP_COUNT_TRIANGLES = 2 } mp_count_kind;

MP_API mp_status mp_count(mp_count_kind kind, uint64_t n, uint64_t* out);

/* ---- graphs ---- */

typedef struct mp_graph mp_graph;

typedef enum mp_euler_class { MP_EULER_CIRCUIT = 0, MP_EULER_PATH = 1, MP_EULER_NONE = 2 } mp_euler_class;

/* First line n, then one "i j" edge per line. */
MP_API mp_status mp_graph_parse(const char* text, mp_graph** out);
/* endpoints holds 2 * edge_count vertex indices. */
MP_API mp_status mp_graph_create(size_t vertex_count, const size_t* endpoints, size_t edge_count, mp_graph** out);
MP_API size_t mp_graph_vertex_count(const mp_graph* g);
MP_API size_t mp_graph_edge_count(const mp_graph* g);
MP_API mp_status mp_graph_degrees(const mp_graph* g, size_t* out);
/* out receives vertex_count * vertex_count entries, row-major. */
MP_API mp_status mp_graph_adjacency_power(const mp_graph* g, uint64_t k, uint64_t* out);
MP_API mp_status mp_graph_count_walks(const mp_graph* g, size_t from, size_t to, uint64_t length, uint64_t* out);
/* start/end are set only for MP_EULER_PATH; either may be NULL. */
MP_API mp_status mp_graph_eulerian(const mp_graph* g, mp_euler_class* cls, size_t* start, size_t* end);
MP_API mp_status mp_graph_is_tree(const mp_graph* g, int* out);
MP_API void mp_graph_free(mp_graph* g);

/* ---- puzzles ---- */

typedef struct mp_tiling mp_tiling;

/* removed holds 2 * removed_count values: col, row. */
MP_API mp_status mp_dominoes_solve(uint32_t width, uint32_t height, const uint32_t* removed, size_t removed_count,
                                   mp_tiling** out);
/* "w h" then col/row pairs of removed cells. */
MP_API mp_status mp_dominoes_solve_text(const char* board_text, mp_tiling** out);
MP_API int mp_tiling_tileable(const mp_tiling* t);
MP_API size_t mp_tiling_domino_count(const mp_tiling* t);
/* cells receives col0, row0, col1, row1. */
MP_API mp_status mp_tiling_domino(const mp_tiling* t, size_t index, uint32_t cells[4]);
MP_API void mp_tiling_free(mp_tiling* t);

/* grid: 16 cells row-major, 0 for empty. solutions receives up to
 * max_reported grids of 16 cells; total counts every completion. */
MP_API mp_status mp_sudoku4_parse(const char* text, uint8_t grid[16]);
MP_API mp_status mp_sudoku4_solve(const uint8_t grid[16], size_t max_reported, uint8_t* solutions,
                                  size_t* reported, size_t* total);

/* headings: +1 right, -1 left. */
MP_API mp_status mp_ants_clear_time(double length, double speed, const double* positions, const int* headings,
                                    size_t count, double* out);

typedef enum mp_hop_constraint { MP_HOPS_EQUAL = 0, MP_HOPS_RIGHT_EXCEEDS_UP = 1, MP_HOPS_ANY = 2 } mp_hop_constraint;

MP_API int mp_dwarf_reachable(int64_t x, int64_t y, mp_hop_constraint constraint);

/* ---- figures ---- */

typedef struct mp_drawing mp_drawing;

typedef enum mp_stitch_style { MP_STITCH_PERPENDICULAR = 0, MP_STITCH_V = 1, MP_STITCH_STAR = 2 } mp_stitch_style;
typedef enum mp_curve_kind { MP_CURVE_CARDIOID = 0, MP_CURVE_CYCLOID = 1, MP_CURVE_EPICYCLOID = 2 } mp_curve_kind;

MP_API mp_status mp_render_modular(uint32_t n, uint32_t k, int include_circle, mp_drawing** out);
MP_API mp_status mp_render_skip(uint32_t n, uint32_t skip, mp_drawing** out);
MP_API mp_status mp_render_stitch(uint32_t n, mp_stitch_style style, mp_drawing** out);
/* Cycloid uses a as its radius; epicycloid uses a = fixed, b = rolling radius. */
MP_API mp_status mp_render_curve(mp_curve_kind kind, double a, double b, size_t samples, mp_drawing** out);
MP_API mp_status mp_render_tree(double length, double theta, double decrement, double min_len, mp_drawing** out);
/* angle overrides the system's angle when has_angle is nonzero. */
MP_API mp_status mp_render_lsystem(const char* rules_text, size_t order, double step, double angle, int has_angle,
                                   mp_drawing** out);
MP_API mp_status mp_render_lsystem_preset(const char* name, mp_drawing** out);
MP_API mp_status mp_lsystem_expand(const char* rules_text, size_t order, char** out);
MP_API size_t mp_drawing_polyline_count(const mp_drawing* d);
MP_API size_t mp_drawing_segment_count(const mp_drawing* d);
MP_API mp_status mp_drawing_to_svg(const mp_drawing* d, char** out);
MP_API mp_status mp_drawing_to_points_json(const mp_drawing* d, char** out);
MP_API void mp_drawing_free(mp_drawing* d);

/* ---- numerics ---- */

MP_API mp_status mp_buffon_estimate(double length, double spacing, uint64_t drops, uint64_t seed, double* pi_estimate,
                                    uint64_t* crossings);
MP_API mp_status mp_mandelbrot_escape(double re, double im, uint32_t max_iter, int* escaped, uint32_t* iteration);
MP_API mp_status mp_fibonacci(uint64_t n, uint64_t* out);
/* out receives n + 1 entries. */
MP_API mp_status mp_pascal_row(uint64_t n, uint64_t* out);
MP_API mp_status mp_fib_reciprocal_digits(uint32_t base, size_t count, char** out);
MP_API mp_status mp_gauss_sum(uint64_t n, uint64_t* out);
/* r holds R1..R5; matrix receives the 2x2 row-major form. */
MP_API mp_status mp_resistor_matrix(const double r[5], double matrix[4], int* positive_definite);

/* ---- service ---- */

typedef struct mp_service mp_service;

/* ttl_ms <= 0 keeps the default hour; snapshot_path may be NULL. */
MP_API mp_status mp_service_create(int64_t ttl_ms, const char* snapshot_path, mp_service** out);
/* In-process request, e.g. ("GET", "/api/puzzle/squares?n=8", NULL). */
MP_API mp_status mp_service_handle(mp_service* s, const char* method, const char* target, const char* body,
                                   int* http_status, char** content_type, char** response_body);
/* Binds and serves on a background thread; port 0 picks a free port. */
MP_API mp_status mp_service_listen(mp_service* s, const char* host, int port, const char* ui_dir, int* bound_port);
/* Blocks until the listener stops. */
MP_API mp_status mp_service_wait(mp_service* s);
MP_API void mp_service_stop(mp_service* s);
MP_API void mp_service_free(mp_service* s);

#ifdef __cplusplus
}
#endif

#endif
