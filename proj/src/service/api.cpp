#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <string_view>

#include "json_shapes.hpp"
#include "mathplay/curves.hpp"
#include "mathplay/error.hpp"
#include "mathplay/graphs.hpp"
#include "mathplay/lsystem.hpp"
#include "mathplay/numerics.hpp"
#include "mathplay/puzzles.hpp"
#include "mathplay/service.hpp"
#include "mathplay/turtle.hpp"

namespace mathplay::service {

namespace {

// Error carried straight to the response; codes are part of the API contract.
struct ApiError {
  int status;
  std::string code;
  std::string message;
};

[[noreturn]] void bad_request(const std::string& message) { throw ApiError{400, "BadRequest", message}; }
[[noreturn]] void out_of_range(const std::string& message) { throw ApiError{422, "ParameterOutOfRange", message}; }

ApiResponse json_response(const Json& body, int status = 200) {
  return {status, "application/json", body.dump()};
}

ApiResponse error_response(int status, const std::string& code, const std::string& message) {
  return json_response(error_json(code, message), status);
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < path.size()) {
    while (i < path.size() && path[i] == '/') ++i;
    const auto start = i;
    while (i < path.size() && path[i] != '/') ++i;
    if (i > start) parts.push_back(path.substr(start, i - start));
  }
  return parts;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string percent_decode(std::string_view s, bool plus_is_space) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size() + 0 && hex_value(s[i + 1]) >= 0 && hex_value(s[i + 2]) >= 0) {
      out.push_back(static_cast<char>(hex_value(s[i + 1]) * 16 + hex_value(s[i + 2])));
      i += 2;
    } else if (s[i] == '+' && plus_is_space) {
      out.push_back(' ');
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

class Query {
 public:
  explicit Query(const std::multimap<std::string, std::string>& params) : params_(params) {}

  std::optional<std::string> text(const std::string& key) const {
    const auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    return it->second;
  }

  std::string text_or(const std::string& key, std::string fallback) const {
    return text(key).value_or(std::move(fallback));
  }

  std::uint64_t uint(const std::string& key, std::optional<std::uint64_t> fallback, std::uint64_t min,
                     std::uint64_t max) const {
    const auto raw = text(key);
    if (!raw) {
      if (!fallback) bad_request("missing parameter '" + key + "'");
      return *fallback;
    }
    std::int64_t signed_value = 0;
    std::uint64_t value = 0;
    const auto* begin = raw->data();
    const auto* end = raw->data() + raw->size();
    if (!raw->empty() && raw->front() == '-') {
      const auto [p, ec] = std::from_chars(begin, end, signed_value);
      if (ec != std::errc{} || p != end) bad_request("parameter '" + key + "' must be an integer");
      out_of_range("parameter '" + key + "' must be in " + std::to_string(min) + ".." + std::to_string(max));
    }
    const auto [p, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) out_of_range("parameter '" + key + "' is too large");
    if (ec != std::errc{} || p != end || raw->empty()) bad_request("parameter '" + key + "' must be an integer");
    if (value < min || value > max) {
      out_of_range("parameter '" + key + "' must be in " + std::to_string(min) + ".." + std::to_string(max));
    }
    return value;
  }

  std::int64_t integer(const std::string& key) const {
    const auto raw = text(key);
    if (!raw) bad_request("missing parameter '" + key + "'");
    std::int64_t value = 0;
    const auto [p, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), value);
    if (ec != std::errc{} || p != raw->data() + raw->size() || raw->empty()) {
      bad_request("parameter '" + key + "' must be an integer");
    }
    return value;
  }

  double real(const std::string& key, std::optional<double> fallback) const {
    const auto raw = text(key);
    if (!raw) {
      if (!fallback) bad_request("missing parameter '" + key + "'");
      return *fallback;
    }
    double value = 0;
    const auto [p, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), value);
    if (ec != std::errc{} || p != raw->data() + raw->size() || raw->empty()) {
      bad_request("parameter '" + key + "' must be a number");
    }
    if (!std::isfinite(value)) out_of_range("parameter '" + key + "' must be finite");
    return value;
  }

 private:
  const std::multimap<std::string, std::string>& params_;
};

std::uint64_t json_uint(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) bad_request(std::string(what) + " must not be negative");
  bad_request(std::string(what) + " must be a non-negative integer");
}

Json parse_body(const std::string& body) {
  auto j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) bad_request("request body must be a JSON object");
  return j;
}

ApiResponse drawing_response(const Drawing& d, const std::string& format) {
  if (format == "svg") return {200, "image/svg+xml", turtle::emit_svg(d)};
  Json body;
  if (format == "json") {
    body["svg"] = turtle::emit_svg(d);
  } else if (format == "points") {
    body["points"] = points_json(d);
  } else {
    bad_request("format must be svg, json or points");
  }
  body["polylines"] = d.polylines.size();
  body["segments"] = d.segment_count();
  return json_response(body);
}

// ---- games ----

Session apply_engine(Session s) {
  if (s.over()) return s;
  if (s.nim) {
    const auto move = games::engine_move(s.heaps);
    if (!move) return s;
    s.heaps = games::apply_move(s.heaps, *move);
    s.move_log.push_back({Player::Engine, *move});
  } else {
    const games::SubtractionGame game(s.target, {s.move_sizes.begin(), s.move_sizes.end()});
    const auto take = games::engine_move(game, s.remaining);
    if (!take) return s;
    s.remaining -= *take;
    s.move_log.push_back({Player::Engine, {0, *take}});
  }
  s.to_move = Player::Human;
  return s;
}

ApiResponse create_game(Api& api, const ApiRequest& req) {
  const auto body = parse_body(req.body);
  const auto& limits = api.limits();
  Session s;
  std::string kind = body.value("kind", body.contains("heaps") ? "nim" : "make");
  if (kind == "nim") {
    s.nim = true;
    if (!body.contains("heaps") || !body["heaps"].is_array()) bad_request("nim needs a 'heaps' array");
    if (body["heaps"].size() > limits.max_heaps) out_of_range("too many heaps");
    for (const auto& h : body["heaps"]) {
      const auto count = json_uint(h, "heap counts");
      if (count > limits.max_heap) out_of_range("heap count too large");
      s.heaps.push_back(count);
    }
  } else if (kind == "make") {
    s.nim = false;
    if (!body.contains("target")) bad_request("make needs a 'target'");
    s.target = json_uint(body["target"], "target");
    if (s.target > limits.max_target) out_of_range("target too large");
    if (!body.contains("moves") || !body["moves"].is_array() || body["moves"].empty()) {
      bad_request("make needs a non-empty 'moves' array");
    }
    if (body["moves"].size() > limits.max_heaps) out_of_range("too many move sizes");
    std::set<std::uint64_t> moves;
    for (const auto& m : body["moves"]) {
      const auto size = json_uint(m, "move sizes");
      if (size == 0) bad_request("move sizes must be positive");
      moves.insert(size);
    }
    s.move_sizes.assign(moves.begin(), moves.end());
    s.remaining = s.target;
  } else {
    bad_request("kind must be 'nim' or 'make'");
  }

  const auto side = body.value("humanSide", std::string("First"));
  if (side != "First" && side != "Second") bad_request("humanSide must be 'First' or 'Second'");
  s.human_side = side == "First" ? Side::First : Side::Second;
  s.to_move = s.human_side == Side::First ? Player::Human : Player::Engine;
  if (s.to_move == Player::Engine) s = apply_engine(std::move(s));

  const auto stored = api.sessions().create(std::move(s));
  return json_response(session_json(stored), 201);
}

ApiResponse get_game(Api& api, const std::string& id) {
  const auto s = api.sessions().get(id);
  if (!s) throw ApiError{404, "UnknownSession", "no session '" + id + "'"};
  return json_response(session_json(*s));
}

ApiResponse submit_move(Api& api, const std::string& id, const ApiRequest& req) {
  const auto body = parse_body(req.body);
  const auto updated = api.sessions().update(id, [&](Session& s) {
    if (s.over() || s.to_move != Player::Human) {
      throw ApiError{409, "NotYourTurn", "it is not the human player's turn"};
    }
    if (s.nim) {
      if (!body.contains("heap") || !body.contains("take")) bad_request("nim moves need 'heap' and 'take'");
      const games::NimMove move{json_uint(body["heap"], "heap"), json_uint(body["take"], "take")};
      s.heaps = games::apply_move(s.heaps, move);
      s.move_log.push_back({Player::Human, move});
    } else {
      const char* key = body.contains("take") ? "take" : "add";
      if (!body.contains(key)) bad_request("make moves need 'take'");
      const auto take = json_uint(body[key], "take");
      if (std::find(s.move_sizes.begin(), s.move_sizes.end(), take) == s.move_sizes.end()) {
        throw Error(ErrorCode::IllegalMove, std::to_string(take) + " is not an allowed move");
      }
      if (take > s.remaining) {
        throw Error(ErrorCode::IllegalMove, "only " + std::to_string(s.remaining) + " left to reach the target");
      }
      s.remaining -= take;
      s.move_log.push_back({Player::Human, {0, take}});
    }
    s.to_move = Player::Engine;
    s = apply_engine(std::move(s));
  });
  if (!updated) throw ApiError{404, "UnknownSession", "no session '" + id + "'"};
  return json_response(session_json(*updated));
}

// ---- rendering ----

ApiResponse render_chords(Api& api, const Query& q) {
  const auto n = static_cast<std::uint32_t>(q.uint("n", std::nullopt, 2, api.limits().max_points));
  const auto k = static_cast<std::uint32_t>(q.uint("k", std::nullopt, 0, 1'000'000));
  const bool circle = q.uint("circle", 0, 0, 1) == 1;
  return drawing_response(curves::chord_drawing(curves::modular_chords(n, k), circle), q.text_or("format", "svg"));
}

ApiResponse render_curve(Api& api, const Query& q) {
  const auto& limits = api.limits();
  const auto kind = q.text("kind");
  if (!kind) bad_request("missing parameter 'kind'");
  Drawing d;
  if (*kind == "cardioid" || *kind == "cycloid" || *kind == "epicycloid") {
    const auto samples = q.uint("samples", 721, 2, limits.max_samples);
    curves::ParametricCurve curve = curves::Cardioid{};
    if (*kind == "cycloid") {
      curve = curves::Cycloid{q.real("radius", 1.0)};
    } else if (*kind == "epicycloid") {
      curve = curves::Epicycloid{q.real("fixedRadius", 1.0), q.real("rollingRadius", 1.0)};
    }
    d = curves::sample_parametric(curve, samples);
  } else if (*kind == "stitch") {
    const auto n = static_cast<std::uint32_t>(q.uint("n", 10, 2, limits.max_points));
    const auto style = q.text_or("style", "perpendicular");
    curves::StitchStyle s = curves::StitchStyle::PerpendicularSum;
    if (style == "v") {
      s = curves::StitchStyle::VShape;
    } else if (style == "star") {
      s = curves::StitchStyle::Star;
    } else if (style != "perpendicular") {
      bad_request("style must be perpendicular, v or star");
    }
    d = curves::segments_drawing(curves::curve_stitch(n, s));
  } else if (*kind == "skip") {
    const auto n = static_cast<std::uint32_t>(q.uint("n", 10, 2, limits.max_points));
    const auto skip = static_cast<std::uint32_t>(q.uint("skip", 1, 1, limits.max_points));
    d = curves::skip_count_drawing(n, skip);
  } else if (*kind == "tree") {
    const auto program = turtle::recursive_tree_program(q.real("len", 100.0), q.real("theta", 20.0),
                                                        q.real("decrement", 10.0), q.real("minLen", 5.0),
                                                        limits.max_samples * 20);
    turtle::TurtleState start;
    start.pose.heading = 90.0;
    d = turtle::interpret(program, start);
  } else {
    bad_request("kind must be cardioid, cycloid, epicycloid, stitch, skip or tree");
  }
  return drawing_response(d, q.text_or("format", "svg"));
}

std::set<char> symbol_set(const std::string& s) { return {s.begin(), s.end()}; }

ApiResponse render_lsystem(Api& api, const ApiRequest& req, const Query& q) {
  const auto& limits = api.limits();
  std::string text;
  lsystem::RenderSpec spec;
  std::string format = q.text_or("format", "svg");

  const auto trimmed = req.body.find_first_not_of(" \t\r\n");
  const bool json_body = trimmed != std::string::npos && req.body[trimmed] == '{';
  if (json_body) {
    const auto body = parse_body(req.body);
    if (body.contains("preset")) {
      const auto* preset = lsystem::find_preset(body["preset"].get<std::string>());
      if (!preset) throw ApiError{422, "InvalidSystem", "unknown preset"};
      text = preset->text;
      spec = preset->spec;
    } else if (body.contains("rules") && body["rules"].is_string()) {
      text = body["rules"].get<std::string>();
    } else {
      bad_request("body needs 'rules' text or a 'preset' name");
    }
    if (body.contains("order")) spec.order = json_uint(body["order"], "order");
    if (body.contains("step")) {
      if (!body["step"].is_number()) bad_request("step must be a number");
      spec.step = body["step"].get<double>();
    }
    if (body.contains("angle")) {
      if (!body["angle"].is_number()) bad_request("angle must be a number");
      spec.angle = body["angle"].get<double>();
    }
    if (body.contains("draw")) spec.draw_symbols = symbol_set(body["draw"].get<std::string>());
    if (body.contains("move")) spec.move_symbols = symbol_set(body["move"].get<std::string>());
    if (body.contains("format")) format = body["format"].get<std::string>();
  } else {
    text = req.body;
    spec.order = q.uint("order", 0, 0, limits.max_order);
    spec.step = q.real("step", 1.0);
    if (q.text("angle")) spec.angle = q.real("angle", std::nullopt);
    if (const auto draw = q.text("draw")) spec.draw_symbols = symbol_set(*draw);
    if (const auto move = q.text("move")) spec.move_symbols = symbol_set(*move);
  }
  if (spec.order > limits.max_order) out_of_range("order must be in 0.." + std::to_string(limits.max_order));
  if (!(spec.step > 0) || !std::isfinite(spec.step)) out_of_range("step must be positive");

  lsystem::LSystem system;
  try {
    system = lsystem::parse(text);
  } catch (const Error& e) {
    throw ApiError{422, "InvalidSystem", e.what()};
  }
  Drawing d;
  try {
    d = lsystem::render(system, spec);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OutputTooLarge) out_of_range(e.what());
    throw ApiError{422, "InvalidSystem", e.what()};
  }
  return drawing_response(d, format);
}

// ---- puzzles ----

std::set<puzzles::Cell> parse_cells(const std::string& text) {
  std::set<puzzles::Cell> cells;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const auto pair = text.substr(start, end - start);
    const auto comma = pair.find(',');
    puzzles::Cell c;
    if (comma == std::string::npos ||
        std::from_chars(pair.data(), pair.data() + comma, c.col).ptr != pair.data() + comma ||
        std::from_chars(pair.data() + comma + 1, pair.data() + pair.size(), c.row).ptr != pair.data() + pair.size()) {
      bad_request("removed must look like 'col,row;col,row'");
    }
    cells.insert(c);
    start = end + 1;
  }
  return cells;
}

std::string grid_string(const puzzles::SudokuGrid4& g) {
  std::string s;
  for (auto v : g) s.push_back(static_cast<char>('0' + v));
  return s;
}

ApiResponse puzzle(Api& api, const std::string& name, const Query& q) {
  Json out{{"puzzle", name}};
  if (name == "squares" || name == "rooks" || name == "triangles") {
    const auto n = q.uint("n", std::nullopt, 1, 1'000'000);
    out["n"] = n;
    out["count"] = name == "squares" ? puzzles::count_subsquares(n)
                   : name == "rooks" ? puzzles::count_rook_placements(n)
                                     : puzzles::count_triangles(n);
  } else if (name == "dominoes") {
    const auto w = static_cast<std::uint32_t>(q.uint("width", std::nullopt, 1, 64));
    const auto h = static_cast<std::uint32_t>(q.uint("height", std::nullopt, 1, 64));
    const puzzles::Board board(w, h, parse_cells(q.text_or("removed", "")));
    const auto result = puzzles::domino_tileable(board);
    out["width"] = w;
    out["height"] = h;
    out["tileable"] = result.tileable;
    Json tiling = Json::array();
    for (const auto& d : result.tiling) {
      tiling.push_back(Json::array({Json::array({d.first.col, d.first.row}), Json::array({d.second.col, d.second.row})}));
    }
    out["tiling"] = tiling;
  } else if (name == "sudoku4") {
    auto grid_text = q.text("grid");
    if (!grid_text) bad_request("missing parameter 'grid'");
    for (auto& ch : *grid_text) {
      if (ch == '.') ch = '0';
    }
    if (grid_text->size() != 16) bad_request("grid must have 16 cells");
    puzzles::SudokuGrid4 grid{};
    for (std::size_t i = 0; i < 16; ++i) {
      const char ch = (*grid_text)[i];
      if (ch < '0' || ch > '4') bad_request("grid cells must be 0..4 or '.'");
      grid[i] = static_cast<std::uint8_t>(ch - '0');
    }
    const auto report = puzzles::solve_sudoku4(grid, q.uint("limit", 32, 1, 288));
    Json solutions = Json::array();
    for (const auto& s : report.solutions) solutions.push_back(grid_string(s));
    out["total"] = report.total;
    out["solutions"] = solutions;
    out["truncated"] = report.truncated();
  } else if (name == "ants") {
    puzzles::AntConfig config;
    config.scale_length = q.real("length", 1.0);
    config.speed = q.real("speed", 1.0);
    const auto spec = q.text_or("ants", "");
    std::size_t start = 0;
    while (start < spec.size()) {
      auto end = spec.find(',', start);
      if (end == std::string::npos) end = spec.size();
      const auto item = spec.substr(start, end - start);
      const auto colon = item.find(':');
      double pos = 0;
      int dir = 0;
      if (colon == std::string::npos ||
          std::from_chars(item.data(), item.data() + colon, pos).ptr != item.data() + colon ||
          std::from_chars(item.data() + colon + 1 + (item[colon + 1] == '+' ? 1 : 0), item.data() + item.size(), dir)
                  .ptr != item.data() + item.size() ||
          (dir != 1 && dir != -1)) {
        bad_request("ants must look like 'position:+1,position:-1'");
      }
      config.ants.push_back({pos, dir == 1 ? puzzles::Heading::Right : puzzles::Heading::Left});
      if (config.ants.size() > 10'000) out_of_range("too many ants");
      start = end + 1;
    }
    out["clearTime"] = puzzles::ants_clear_time(config);
    out["worstCase"] = puzzles::worst_case_clear_time(config.scale_length, config.speed);
  } else if (name == "dwarf") {
    const auto x = q.integer("x");
    const auto y = q.integer("y");
    const auto c = q.text_or("constraint", "equal");
    puzzles::HopConstraint constraint = puzzles::HopConstraint::EqualHops;
    if (c == "right-exceeds-up") {
      constraint = puzzles::HopConstraint::RightExceedsUp;
    } else if (c == "any") {
      constraint = puzzles::HopConstraint::Unconstrained;
    } else if (c != "equal") {
      bad_request("constraint must be equal, right-exceeds-up or any");
    }
    out["reachable"] = puzzles::dwarf_reachable(x, y, constraint);
  } else if (name == "mandelbrot") {
    const auto r = curves::mandelbrot_escape({q.real("re", std::nullopt), q.real("im", std::nullopt)},
                                             static_cast<std::uint32_t>(q.uint("maxIter", 1000, 1, 1'000'000)));
    out["bounded"] = !r.escaped;
    out["escapedAt"] = r.escaped ? Json(r.iteration) : Json(nullptr);
  } else if (name == "fibonacci") {
    const auto n = q.uint("n", std::nullopt, 1, 91);
    out["n"] = n;
    out["value"] = numerics::fibonacci(n);
    const auto [sum_l, sum_r] = numerics::fib_sum_check(n);
    const auto [sq_l, sq_r] = numerics::fib_square_sum_check(n);
    out["sumCheck"] = Json::array({sum_l, sum_r});
    out["squareSumCheck"] = Json::array({sq_l, sq_r});
  } else if (name == "pascal") {
    const auto n = q.uint("n", std::nullopt, 0, 67);
    const auto row = numerics::pascal_row(n);
    out["n"] = n;
    out["row"] = row;
  } else if (name == "reciprocal") {
    const auto base = static_cast<std::uint32_t>(q.uint("base", 10, 2, 36));
    const auto count = q.uint("count", 20, 1, 10'000);
    out["base"] = base;
    out["digits"] = numerics::fib_reciprocal_digits(base, count);
  } else if (name == "gauss") {
    const auto n = q.uint("n", std::nullopt, 0, 4'000'000'000ull);
    out["n"] = n;
    out["sum"] = numerics::gauss_sum(n);
  } else if (name == "resistors") {
    const numerics::ResistorSet r{q.real("r1", 1.0), q.real("r2", 1.0), q.real("r3", 1.0), q.real("r4", 1.0),
                                  q.real("r5", 1.0)};
    const auto m = numerics::resistor_matrix(r);
    out["matrix"] = Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
    out["positiveDefinite"] = numerics::is_positive_definite(m);
  } else {
    throw ApiError{404, "NotFound", "unknown puzzle '" + name + "'"};
  }
  (void)api;
  return json_response(out);
}

ApiResponse graph_analysis(const ApiRequest& req, const Query& q) {
  graphs::Graph g = graphs::parse_graph(req.body);
  Json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edges().size();
  out["degrees"] = g.degrees();
  const auto cls = graphs::eulerian_class(g);
  if (std::holds_alternative<graphs::EulerCircuit>(cls)) {
    out["eulerian"] = "Circuit";
  } else if (const auto* p = std::get_if<graphs::EulerPath>(&cls)) {
    out["eulerian"] = "Path";
    out["pathEnds"] = Json::array({p->start, p->end});
  } else {
    out["eulerian"] = "None";
  }
  out["tree"] = graphs::is_tree(g);
  if (q.text("length")) {
    const auto from = q.uint("from", std::nullopt, 0, g.vertex_count() - 1);
    const auto to = q.uint("to", std::nullopt, 0, g.vertex_count() - 1);
    const auto length = q.uint("length", std::nullopt, 0, 1'000'000);
    out["walks"] = graphs::count_walks(g, from, to, length);
  }
  return json_response(out);
}

ApiResponse estimate_pi(Api& api, const Query& q) {
  numerics::NeedleSpec spec;
  spec.drops = q.uint("drops", 100'000, 1, api.limits().max_drops);
  spec.seed = q.uint("seed", 0, 0, UINT64_MAX);
  spec.length = q.real("length", 1.0);
  spec.spacing = q.real("spacing", 1.0);
  const auto r = numerics::buffon_estimate(spec);
  return json_response(Json{{"piEstimate", r.pi_estimate},
                            {"crossings", r.crossings},
                            {"drops", spec.drops},
                            {"seed", spec.seed},
                            {"length", spec.length},
                            {"spacing", spec.spacing},
                            {"sampler", numerics::kBuffonSampler}});
}

ApiResponse presets_listing() {
  Json ls = Json::array();
  for (const auto& p : lsystem::presets()) ls.push_back(Json{{"name", p.name}, {"order", p.spec.order}, {"rules", p.text}});
  Json gallery = Json::array();
  for (const auto& p : curves::gallery_presets()) gallery.push_back(Json{{"name", p.name}, {"n", p.n}, {"k", p.k}});
  return json_response(Json{{"lsystems", ls}, {"chords", gallery}});
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return 500;
    default: return 422;
  }
}

std::string code_for(ErrorCode code) {
  if (code == ErrorCode::InvalidArgument || code == ErrorCode::OutputTooLarge) return "ParameterOutOfRange";
  return std::string(error_code_name(code));
}

}  // namespace

Api::Api(ApiConfig config)
    : config_(std::move(config)), store_(config_.session_ttl, config_.clock, config_.snapshot_path) {
  // Sessions from an earlier run survive a restart.
  if (config_.snapshot_path) store_.recover(*config_.snapshot_path);
}

ApiResponse Api::handle(const ApiRequest& req) {
  const auto parts = split_path(req.path);
  const Query q(req.query);
  auto route = [&](std::size_t size, std::initializer_list<std::string_view> prefix) {
    if (parts.size() != size) return false;
    std::size_t i = 0;
    for (auto p : prefix) {
      if (p != "*" && parts[i] != p) return false;
      ++i;
    }
    return true;
  };
  const bool get = req.method == "GET";
  const bool post = req.method == "POST";
  try {
    if (post && route(2, {"api", "game"})) return create_game(*this, req);
    if (get && route(3, {"api", "game", "*"})) return get_game(*this, std::string(parts[2]));
    if (post && route(4, {"api", "game", "*", "move"})) return submit_move(*this, std::string(parts[2]), req);
    if (get && route(3, {"api", "render", "modular-chords"})) return render_chords(*this, q);
    if (get && route(3, {"api", "render", "curve"})) return render_curve(*this, q);
    if (post && route(3, {"api", "render", "lsystem"})) return render_lsystem(*this, req, q);
    if (post && route(3, {"api", "puzzle", "graph"})) return graph_analysis(req, q);
    if (get && route(3, {"api", "puzzle", "*"})) return puzzle(*this, std::string(parts[2]), q);
    if (get && route(3, {"api", "estimate", "pi"})) return estimate_pi(*this, q);
    if (get && route(2, {"api", "presets"})) return presets_listing();
    return error_response(404, "NotFound", "no endpoint " + req.method + " " + req.path);
  } catch (const ApiError& e) {
    return error_response(e.status, e.code, e.message);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), code_for(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_response(400, "BadRequest", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "Internal", e.what());
  }
}

ApiResponse Api::handle(const std::string& method, const std::string& target, const std::string& body) {
  ApiRequest req;
  req.method = method;
  req.body = body;
  const auto qmark = target.find('?');
  req.path = percent_decode(target.substr(0, qmark), false);
  if (qmark != std::string::npos) {
    std::string_view query(target);
    query.remove_prefix(qmark + 1);
    std::size_t start = 0;
    while (start <= query.size()) {
      auto end = query.find('&', start);
      if (end == std::string_view::npos) end = query.size();
      const auto item = query.substr(start, end - start);
      if (!item.empty()) {
        const auto eq = item.find('=');
        const auto key = percent_decode(item.substr(0, eq), true);
        const auto value = eq == std::string_view::npos ? std::string() : percent_decode(item.substr(eq + 1), true);
        req.query.emplace(key, value);
      }
      start = end + 1;
    }
  }
  return handle(req);
}

}  // namespace mathplay::service
