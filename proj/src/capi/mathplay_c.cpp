#include "mathplay/mathplay.h"

#include <cstring>
#include <string>
#include <thread>

#include "../service/json_shapes.hpp"
#include "mathplay/curves.hpp"
#include "mathplay/error.hpp"
#include "mathplay/games.hpp"
#include "mathplay/graphs.hpp"
#include "mathplay/lsystem.hpp"
#include "mathplay/numerics.hpp"
#include "mathplay/puzzles.hpp"
#include "mathplay/service.hpp"
#include "mathplay/turtle.hpp"

using namespace mathplay;

struct mp_analysis {
  games::GameAnalysis analysis;
  bool nim = true;
};

struct mp_graph {
  graphs::Graph graph;
};

struct mp_tiling {
  puzzles::TilingResult result;
};

struct mp_drawing {
  Drawing drawing;
};

struct mp_service {
  std::unique_ptr<service::Api> api;
  std::unique_ptr<service::HttpServer> server;
  std::thread thread;
};

namespace {

thread_local std::string last_error;

mp_status fail(mp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

mp_status status_of(ErrorCode code) { return static_cast<mp_status>(static_cast<int>(code) + 1); }

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

// Runs `body` translating exceptions into status codes.
template <typename F>
mp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return MP_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MP_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MP_INTERNAL, e.what());
  }
}

#define MP_REQUIRE(p) \
  do {                \
    if (!(p)) return fail(MP_NULL_POINTER, "null pointer: " #p); \
  } while (0)

mp_status make_drawing(Drawing d, mp_drawing** out) {
  *out = new mp_drawing{std::move(d)};
  return MP_OK;
}

}  // namespace

extern "C" {

const char* mp_status_name(mp_status status) {
  switch (status) {
    case MP_OK: return "Ok";
    case MP_NULL_POINTER: return "NullPointer";
    case MP_INTERNAL: return "Internal";
    default: break;
  }
  if (status > MP_OK && status < MP_NULL_POINTER) {
    return error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1)).data();
  }
  return "Unknown";
}

const char* mp_last_error(void) { return last_error.c_str(); }

void mp_string_free(char* s) { std::free(s); }

// ---- games ----

mp_status mp_nim_analyze(const uint64_t* heaps, size_t count, mp_analysis** out) {
  MP_REQUIRE(out);
  if (count > 0) MP_REQUIRE(heaps);
  return guarded([&] {
    *out = new mp_analysis{games::analyze_nim(games::Heaps(heaps, heaps + count)), true};
  });
}

mp_status mp_subtraction_analyze(uint64_t target, const uint64_t* moves, size_t move_count, uint64_t remaining,
                                 mp_analysis** out) {
  MP_REQUIRE(out);
  if (move_count > 0) MP_REQUIRE(moves);
  return guarded([&] {
    const games::SubtractionGame game(target, {moves, moves + move_count});
    if (remaining > target) throw Error(ErrorCode::InvalidArgument, "remaining exceeds the target");
    *out = new mp_analysis{games::analyze_subtraction(game, remaining), false};
  });
}

mp_outcome mp_analysis_outcome(const mp_analysis* a) {
  return a && a->analysis.outcome == games::Outcome::First ? MP_FIRST : MP_SECOND;
}

uint64_t mp_analysis_grundy(const mp_analysis* a) { return a ? a->analysis.grundy : 0; }

size_t mp_analysis_move_count(const mp_analysis* a) { return a ? a->analysis.optimal_moves.size() : 0; }

mp_status mp_analysis_move(const mp_analysis* a, size_t index, size_t* heap, uint64_t* take) {
  MP_REQUIRE(a);
  if (index >= a->analysis.optimal_moves.size()) return fail(MP_INVALID_ARGUMENT, "move index out of range");
  const auto& m = a->analysis.optimal_moves[index];
  if (heap) *heap = m.heap_index;
  if (take) *take = m.take;
  last_error.clear();
  return MP_OK;
}

mp_status mp_analysis_to_json(const mp_analysis* a, char** out) {
  MP_REQUIRE(a);
  MP_REQUIRE(out);
  return guarded([&] { *out = copy_string(service::analysis_json(a->analysis, a->nim).dump()); });
}

void mp_analysis_free(mp_analysis* a) { delete a; }

// ---- counting ----

mp_status mp_count(mp_count_kind kind, uint64_t n, uint64_t* out) {
  MP_REQUIRE(out);
  return guarded([&] {
    switch (kind) {
      case MP_COUNT_SQUARES: *out = puzzles::count_subsquares(n); break;
      case MP_COUNT_ROOKS: *out = puzzles::count_rook_placements(n); break;
      case MP_COUNT_TRIANGLES: *out = puzzles::count_triangles(n); break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown count kind");
    }
  });
}

// ---- graphs ----

mp_status mp_graph_parse(const char* text, mp_graph** out) {
  MP_REQUIRE(text);
  MP_REQUIRE(out);
  return guarded([&] { *out = new mp_graph{graphs::parse_graph(text)}; });
}

mp_status mp_graph_create(size_t vertex_count, const size_t* endpoints, size_t edge_count, mp_graph** out) {
  MP_REQUIRE(out);
  if (edge_count > 0) MP_REQUIRE(endpoints);
  return guarded([&] {
    std::vector<graphs::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new mp_graph{graphs::Graph(vertex_count, std::move(edges))};
  });
}

size_t mp_graph_vertex_count(const mp_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t mp_graph_edge_count(const mp_graph* g) { return g ? g->graph.edges().size() : 0; }

mp_status mp_graph_degrees(const mp_graph* g, size_t* out) {
  MP_REQUIRE(g);
  MP_REQUIRE(out);
  return guarded([&] {
    const auto d = g->graph.degrees();
    std::copy(d.begin(), d.end(), out);
  });
}

mp_status mp_graph_adjacency_power(const mp_graph* g, uint64_t k, uint64_t* out) {
  MP_REQUIRE(g);
  MP_REQUIRE(out);
  return guarded([&] {
    const auto m = graphs::matrix_power(graphs::adjacency_matrix(g->graph), k);
    const auto n = g->graph.vertex_count();
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) out[r * n + c] = m.at(r, c);
    }
  });
}

mp_status mp_graph_count_walks(const mp_graph* g, size_t from, size_t to, uint64_t length, uint64_t* out) {
  MP_REQUIRE(g);
  MP_REQUIRE(out);
  return guarded([&] { *out = graphs::count_walks(g->graph, from, to, length); });
}

mp_status mp_graph_eulerian(const mp_graph* g, mp_euler_class* cls, size_t* start, size_t* end) {
  MP_REQUIRE(g);
  MP_REQUIRE(cls);
  return guarded([&] {
    const auto result = graphs::eulerian_class(g->graph);
    if (std::holds_alternative<graphs::EulerCircuit>(result)) {
      *cls = MP_EULER_CIRCUIT;
    } else if (const auto* p = std::get_if<graphs::EulerPath>(&result)) {
      *cls = MP_EULER_PATH;
      if (start) *start = p->start;
      if (end) *end = p->end;
    } else {
      *cls = MP_EULER_NONE;
    }
  });
}

mp_status mp_graph_is_tree(const mp_graph* g, int* out) {
  MP_REQUIRE(g);
  MP_REQUIRE(out);
  return guarded([&] { *out = graphs::is_tree(g->graph) ? 1 : 0; });
}

void mp_graph_free(mp_graph* g) { delete g; }

// ---- puzzles ----

mp_status mp_dominoes_solve(uint32_t width, uint32_t height, const uint32_t* removed, size_t removed_count,
                            mp_tiling** out) {
  MP_REQUIRE(out);
  if (removed_count > 0) MP_REQUIRE(removed);
  return guarded([&] {
    std::set<puzzles::Cell> cells;
    for (size_t i = 0; i < removed_count; ++i) cells.insert({removed[2 * i], removed[2 * i + 1]});
    *out = new mp_tiling{puzzles::domino_tileable(puzzles::Board(width, height, std::move(cells)))};
  });
}

mp_status mp_dominoes_solve_text(const char* board_text, mp_tiling** out) {
  MP_REQUIRE(board_text);
  MP_REQUIRE(out);
  return guarded([&] { *out = new mp_tiling{puzzles::domino_tileable(puzzles::parse_board(board_text))}; });
}

int mp_tiling_tileable(const mp_tiling* t) { return t && t->result.tileable ? 1 : 0; }

size_t mp_tiling_domino_count(const mp_tiling* t) { return t ? t->result.tiling.size() : 0; }

mp_status mp_tiling_domino(const mp_tiling* t, size_t index, uint32_t cells[4]) {
  MP_REQUIRE(t);
  MP_REQUIRE(cells);
  if (index >= t->result.tiling.size()) return fail(MP_INVALID_ARGUMENT, "domino index out of range");
  const auto& d = t->result.tiling[index];
  cells[0] = d.first.col;
  cells[1] = d.first.row;
  cells[2] = d.second.col;
  cells[3] = d.second.row;
  last_error.clear();
  return MP_OK;
}

void mp_tiling_free(mp_tiling* t) { delete t; }

mp_status mp_sudoku4_parse(const char* text, uint8_t grid[16]) {
  MP_REQUIRE(text);
  MP_REQUIRE(grid);
  return guarded([&] {
    const auto g = puzzles::parse_sudoku4(text);
    std::copy(g.begin(), g.end(), grid);
  });
}

mp_status mp_sudoku4_solve(const uint8_t grid[16], size_t max_reported, uint8_t* solutions, size_t* reported,
                           size_t* total) {
  MP_REQUIRE(grid);
  if (max_reported > 0) MP_REQUIRE(solutions);
  return guarded([&] {
    puzzles::SudokuGrid4 g{};
    std::copy(grid, grid + 16, g.begin());
    for (auto v : g) {
      if (v > 4) throw Error(ErrorCode::InvalidArgument, "cells must be in 0..4");
    }
    const auto report = puzzles::solve_sudoku4(g, max_reported);
    for (size_t i = 0; i < report.solutions.size(); ++i) {
      std::copy(report.solutions[i].begin(), report.solutions[i].end(), solutions + 16 * i);
    }
    if (reported) *reported = report.solutions.size();
    if (total) *total = report.total;
  });
}

mp_status mp_ants_clear_time(double length, double speed, const double* positions, const int* headings, size_t count,
                             double* out) {
  MP_REQUIRE(out);
  if (count > 0) {
    MP_REQUIRE(positions);
    MP_REQUIRE(headings);
  }
  return guarded([&] {
    puzzles::AntConfig config{length, speed, {}};
    for (size_t i = 0; i < count; ++i) {
      if (headings[i] != 1 && headings[i] != -1) throw Error(ErrorCode::InvalidArgument, "headings must be +1 or -1");
      config.ants.push_back({positions[i], headings[i] == 1 ? puzzles::Heading::Right : puzzles::Heading::Left});
    }
    *out = puzzles::ants_clear_time(config);
  });
}

int mp_dwarf_reachable(int64_t x, int64_t y, mp_hop_constraint constraint) {
  puzzles::HopConstraint c = puzzles::HopConstraint::EqualHops;
  if (constraint == MP_HOPS_RIGHT_EXCEEDS_UP) c = puzzles::HopConstraint::RightExceedsUp;
  if (constraint == MP_HOPS_ANY) c = puzzles::HopConstraint::Unconstrained;
  return puzzles::dwarf_reachable(x, y, c) ? 1 : 0;
}

// ---- figures ----

mp_status mp_render_modular(uint32_t n, uint32_t k, int include_circle, mp_drawing** out) {
  MP_REQUIRE(out);
  return guarded([&] { make_drawing(curves::chord_drawing(curves::modular_chords(n, k), include_circle != 0), out); });
}

mp_status mp_render_skip(uint32_t n, uint32_t skip, mp_drawing** out) {
  MP_REQUIRE(out);
  return guarded([&] { make_drawing(curves::skip_count_drawing(n, skip), out); });
}

mp_status mp_render_stitch(uint32_t n, mp_stitch_style style, mp_drawing** out) {
  MP_REQUIRE(out);
  return guarded([&] {
    auto s = curves::StitchStyle::PerpendicularSum;
    if (style == MP_STITCH_V) s = curves::StitchStyle::VShape;
    if (style == MP_STITCH_STAR) s = curves::StitchStyle::Star;
    make_drawing(curves::segments_drawing(curves::curve_stitch(n, s)), out);
  });
}

mp_status mp_render_curve(mp_curve_kind kind, double a, double b, size_t samples, mp_drawing** out) {
  MP_REQUIRE(out);
  return guarded([&] {
    curves::ParametricCurve curve = curves::Cardioid{};
    if (kind == MP_CURVE_CYCLOID) curve = curves::Cycloid{a};
    if (kind == MP_CURVE_EPICYCLOID) curve = curves::Epicycloid{a, b};
    make_drawing(curves::sample_parametric(curve, samples), out);
  });
}

mp_status mp_render_tree(double length, double theta, double decrement, double min_len, mp_drawing** out) {
  MP_REQUIRE(out);
  return guarded([&] { make_drawing(turtle::recursive_tree(length, theta, decrement, min_len), out); });
}

mp_status mp_render_lsystem(const char* rules_text, size_t order, double step, double angle, int has_angle,
                            mp_drawing** out) {
  MP_REQUIRE(rules_text);
  MP_REQUIRE(out);
  return guarded([&] {
    lsystem::RenderSpec spec;
    spec.order = order;
    spec.step = step;
    if (has_angle) spec.angle = angle;
    make_drawing(lsystem::render(lsystem::parse(rules_text), spec), out);
  });
}

mp_status mp_render_lsystem_preset(const char* name, mp_drawing** out) {
  MP_REQUIRE(name);
  MP_REQUIRE(out);
  return guarded([&] {
    const auto* preset = lsystem::find_preset(name);
    if (!preset) throw Error(ErrorCode::InvalidArgument, std::string("unknown preset '") + name + "'");
    make_drawing(lsystem::render(lsystem::parse(preset->text), preset->spec), out);
  });
}

mp_status mp_lsystem_expand(const char* rules_text, size_t order, char** out) {
  MP_REQUIRE(rules_text);
  MP_REQUIRE(out);
  return guarded([&] { *out = copy_string(lsystem::expand(lsystem::parse(rules_text), order)); });
}

size_t mp_drawing_polyline_count(const mp_drawing* d) { return d ? d->drawing.polylines.size() : 0; }

size_t mp_drawing_segment_count(const mp_drawing* d) { return d ? d->drawing.segment_count() : 0; }

mp_status mp_drawing_to_svg(const mp_drawing* d, char** out) {
  MP_REQUIRE(d);
  MP_REQUIRE(out);
  return guarded([&] { *out = copy_string(turtle::emit_svg(d->drawing)); });
}

mp_status mp_drawing_to_points_json(const mp_drawing* d, char** out) {
  MP_REQUIRE(d);
  MP_REQUIRE(out);
  return guarded([&] {
    service::Json j;
    j["points"] = service::points_json(d->drawing);
    j["polylines"] = d->drawing.polylines.size();
    j["segments"] = d->drawing.segment_count();
    *out = copy_string(j.dump());
  });
}

void mp_drawing_free(mp_drawing* d) { delete d; }

// ---- numerics ----

mp_status mp_buffon_estimate(double length, double spacing, uint64_t drops, uint64_t seed, double* pi_estimate,
                             uint64_t* crossings) {
  MP_REQUIRE(pi_estimate);
  return guarded([&] {
    const auto r = numerics::buffon_estimate({length, spacing, drops, seed});
    *pi_estimate = r.pi_estimate;
    if (crossings) *crossings = r.crossings;
  });
}

mp_status mp_mandelbrot_escape(double re, double im, uint32_t max_iter, int* escaped, uint32_t* iteration) {
  MP_REQUIRE(escaped);
  return guarded([&] {
    const auto r = curves::mandelbrot_escape({re, im}, max_iter);
    *escaped = r.escaped ? 1 : 0;
    if (iteration) *iteration = r.iteration;
  });
}

mp_status mp_fibonacci(uint64_t n, uint64_t* out) {
  MP_REQUIRE(out);
  return guarded([&] { *out = numerics::fibonacci(n); });
}

mp_status mp_pascal_row(uint64_t n, uint64_t* out) {
  MP_REQUIRE(out);
  return guarded([&] {
    const auto row = numerics::pascal_row(n);
    std::copy(row.begin(), row.end(), out);
  });
}

mp_status mp_fib_reciprocal_digits(uint32_t base, size_t count, char** out) {
  MP_REQUIRE(out);
  return guarded([&] { *out = copy_string(numerics::fib_reciprocal_digits(base, count)); });
}

mp_status mp_gauss_sum(uint64_t n, uint64_t* out) {
  MP_REQUIRE(out);
  return guarded([&] { *out = numerics::gauss_sum(n); });
}

mp_status mp_resistor_matrix(const double r[5], double matrix[4], int* positive_definite) {
  MP_REQUIRE(r);
  MP_REQUIRE(matrix);
  return guarded([&] {
    const auto m = numerics::resistor_matrix({r[0], r[1], r[2], r[3], r[4]});
    std::copy(m.m.begin(), m.m.end(), matrix);
    if (positive_definite) *positive_definite = numerics::is_positive_definite(m) ? 1 : 0;
  });
}

// ---- service ----

mp_status mp_service_create(int64_t ttl_ms, const char* snapshot_path, mp_service** out) {
  MP_REQUIRE(out);
  return guarded([&] {
    service::ApiConfig config;
    if (ttl_ms > 0) config.session_ttl = std::chrono::milliseconds(ttl_ms);
    if (snapshot_path) config.snapshot_path = snapshot_path;
    auto* s = new mp_service;
    s->api = std::make_unique<service::Api>(std::move(config));
    *out = s;
  });
}

mp_status mp_service_handle(mp_service* s, const char* method, const char* target, const char* body, int* http_status,
                            char** content_type, char** response_body) {
  MP_REQUIRE(s);
  MP_REQUIRE(method);
  MP_REQUIRE(target);
  MP_REQUIRE(http_status);
  MP_REQUIRE(response_body);
  return guarded([&] {
    const auto r = s->api->handle(method, target, body ? body : "");
    *http_status = r.status;
    if (content_type) *content_type = copy_string(r.content_type);
    *response_body = copy_string(r.body);
  });
}

mp_status mp_service_listen(mp_service* s, const char* host, int port, const char* ui_dir, int* bound_port) {
  MP_REQUIRE(s);
  if (s->server) return fail(MP_INVALID_ARGUMENT, "service is already listening");
  return guarded([&] {
    service::ServerConfig config;
    if (host) config.host = host;
    config.port = port;
    if (ui_dir) config.ui_dir = ui_dir;
    auto server = std::make_unique<service::HttpServer>(*s->api, config);
    const int bound = server->bind();
    if (bound < 0) throw Error(ErrorCode::Io, "could not bind " + config.host + ":" + std::to_string(port));
    s->server = std::move(server);
    s->thread = std::thread([srv = s->server.get()] { srv->serve(); });
    s->server->wait_until_ready();
    if (bound_port) *bound_port = bound;
  });
}

mp_status mp_service_wait(mp_service* s) {
  MP_REQUIRE(s);
  if (s->thread.joinable()) s->thread.join();
  last_error.clear();
  return MP_OK;
}

void mp_service_stop(mp_service* s) {
  if (!s || !s->server) return;
  s->server->stop();
  if (s->thread.joinable()) s->thread.join();
}

void mp_service_free(mp_service* s) {
  if (!s) return;
  mp_service_stop(s);
  delete s;
}

}  // extern "C"
