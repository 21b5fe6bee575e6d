// mathplay command-line front end. Links only the C API.

#include <csignal>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mathplay/mathplay.h"

namespace {

using Json = nlohmann::ordered_json;

struct DomainError {
  std::string message;
};

void check(mp_status status) {
  if (status != MP_OK) throw DomainError{std::string(mp_status_name(status)) + ": " + mp_last_error()};
}

// Owns a malloc'd string from the C API.
struct CString {
  char* p = nullptr;
  ~CString() { mp_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError{"Io: cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(contents.data(), static_cast<std::streamsize>(contents.size()))) {
    throw DomainError{"Io: cannot write '" + path + "'"};
  }
}

std::string number(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, r.ptr};
}

// In-process call into the service so --json output matches the HTTP shapes.
std::string service_call(const std::string& method, const std::string& target, const std::string& body = {}) {
  mp_service* svc = nullptr;
  check(mp_service_create(0, nullptr, &svc));
  int status = 0;
  CString response;
  const auto rc = mp_service_handle(svc, method.c_str(), target.c_str(), body.c_str(), &status, nullptr, &response.p);
  mp_service_free(svc);
  check(rc);
  if (status >= 400) {
    const auto j = Json::parse(response.str(), nullptr, false);
    if (!j.is_discarded() && j.contains("error")) {
      throw DomainError{j["error"]["code"].get<std::string>() + ": " + j["error"]["message"].get<std::string>()};
    }
    throw DomainError{"service returned " + std::to_string(status)};
  }
  return response.str();
}

void emit_json(const std::string& body) {
  const auto j = Json::parse(body, nullptr, false);
  std::cout << (j.is_discarded() ? body : j.dump(2)) << "\n";
}

// Either writes SVG (or points JSON) to --out, or prints it.
void emit_drawing(mp_drawing* d, const std::string& out_path, bool json) {
  CString text;
  const auto rc = json ? mp_drawing_to_points_json(d, &text.p) : mp_drawing_to_svg(d, &text.p);
  const auto polylines = mp_drawing_polyline_count(d);
  const auto segments = mp_drawing_segment_count(d);
  mp_drawing_free(d);
  check(rc);
  if (out_path.empty()) {
    std::cout << text.str();
    if (json) std::cout << "\n";
    return;
  }
  write_file(out_path, text.str());
  std::cout << "wrote: " << out_path << "\npolylines: " << polylines << "\nsegments: " << segments << "\n";
}

std::vector<std::uint64_t> split_moves(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t v = 0;
    const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
    if (r.ec != std::errc{} || r.ptr != item.data() + item.size()) throw CLI::ValidationError("--moves", "bad move '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string grid_rows(const std::uint8_t* g) {
  std::string s;
  for (int r = 0; r < 4; ++r) {
    if (r) s.push_back(' ');
    for (int c = 0; c < 4; ++c) s.push_back(static_cast<char>('0' + g[r * 4 + c]));
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mathplay: recreational mathematics toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the service's JSON shapes instead of key: value text");

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "Solve a game or puzzle");
  solve->require_subcommand(1);

  std::vector<std::uint64_t> heaps;
  auto* nim = solve->add_subcommand("nim", "Analyze a Nim position");
  nim->add_option("heaps", heaps, "Heap sizes")->required();

  std::uint64_t target = 0;
  std::string moves_text;
  std::optional<std::uint64_t> remaining;
  auto* make = solve->add_subcommand("make", "Analyze the race to a target total");
  make->add_option("target", target, "Target total")->required();
  make->add_option("--moves", moves_text, "Allowed additions, comma separated")->required();
  make->add_option("--remaining", remaining, "Amount still to add (default: the whole target)");

  std::string grid_file;
  std::size_t sudoku_limit = 32;
  auto* sudoku = solve->add_subcommand("sudoku4", "Solve a 4x4 Sudoku");
  sudoku->add_option("gridfile", grid_file, "16 integers in 0..4, 0 for empty")->required();
  sudoku->add_option("--limit", sudoku_limit, "Maximum solutions to print");

  std::string board_file;
  auto* dominoes = solve->add_subcommand("dominoes", "Decide a domino tiling");
  dominoes->add_option("boardfile", board_file, "\"w h\" then removed col/row pairs")->required();

  std::string graph_file;
  std::vector<std::uint64_t> walks;
  auto* graph = solve->add_subcommand("graph", "Degrees, Euler class and walk counts");
  graph->add_option("graphfile", graph_file, "n, then one \"i j\" edge per line")->required();
  graph->add_option("--walks", walks, "FROM TO LENGTH")->expected(3)->delimiter(',');

  double ant_length = 1.0;
  double ant_speed = 1.0;
  std::vector<std::string> ant_specs;
  auto* ants = solve->add_subcommand("ants", "Time until every ant has left the stick");
  ants->add_option("--length", ant_length, "Stick length");
  ants->add_option("--speed", ant_speed, "Ant speed");
  ants->add_option("ants", ant_specs, "position:+1 or position:-1")->required();

  std::int64_t dwarf_x = 0;
  std::int64_t dwarf_y = 0;
  std::string constraint = "equal";
  auto* dwarf = solve->add_subcommand("dwarf", "Lattice reachability by paired hops");
  dwarf->add_option("x", dwarf_x)->required();
  dwarf->add_option("y", dwarf_y)->required();
  dwarf->add_option("--constraint", constraint)->check(CLI::IsMember({"equal", "right-exceeds-up", "any"}));

  double mre = 0;
  double mim = 0;
  std::uint32_t max_iter = 1000;
  auto* mandel = solve->add_subcommand("mandelbrot", "Escape test for c = re + i im");
  mandel->add_option("re", mre)->required();
  mandel->add_option("im", mim)->required();
  mandel->add_option("--max-iter", max_iter);

  std::uint64_t num_n = 0;
  auto* fib = solve->add_subcommand("fibonacci", "F(n) with the sum identities");
  fib->add_option("n", num_n)->required();
  auto* pascal = solve->add_subcommand("pascal", "Row n of Pascal's triangle");
  pascal->add_option("n", num_n)->required();
  auto* gauss = solve->add_subcommand("gauss", "1 + 2 + ... + n");
  gauss->add_option("n", num_n)->required();
  std::uint32_t recip_base = 10;
  std::size_t recip_count = 20;
  auto* recip = solve->add_subcommand("reciprocal", "Digits of 1/(b^2 - b - 1)");
  recip->add_option("--base", recip_base);
  recip->add_option("--count", recip_count);
  std::vector<double> resistances;
  auto* resist = solve->add_subcommand("resistors", "Quadratic form of a five-resistor network");
  resist->add_option("r", resistances, "R1 R2 R3 R4 R5")->expected(5)->required();

  // ---- count ----
  std::string count_kind;
  std::uint64_t count_n = 0;
  auto* count = app.add_subcommand("count", "Closed-form counts");
  count->add_option("kind", count_kind)->required()->check(CLI::IsMember({"squares", "rooks", "triangles"}));
  count->add_option("n", count_n)->required();

  // ---- render ----
  auto* render = app.add_subcommand("render", "Render a figure to SVG");
  render->require_subcommand(1);
  std::string out_path;

  std::uint32_t rn = 10;
  std::uint32_t rk = 2;
  bool circle = false;
  auto* modular = render->add_subcommand("modular", "Chords i -> k*i mod n");
  modular->add_option("-n", rn)->required();
  modular->add_option("-k", rk)->required();
  modular->add_flag("--circle", circle, "Also draw the circle");
  modular->add_option("--out", out_path);

  std::string curve_kind;
  double radius = 1.0;
  double fixed_radius = 1.0;
  double rolling_radius = 1.0;
  std::size_t samples = 721;
  auto* curve = render->add_subcommand("curve", "Sampled parametric curve");
  curve->add_option("--kind", curve_kind)->required()->check(CLI::IsMember({"cardioid", "cycloid", "epicycloid"}));
  curve->add_option("--radius", radius, "Cycloid radius");
  curve->add_option("--fixed-radius", fixed_radius, "Epicycloid fixed radius");
  curve->add_option("--rolling-radius", rolling_radius, "Epicycloid rolling radius");
  curve->add_option("--samples", samples);
  curve->add_option("--out", out_path);

  std::string rules_file;
  std::string preset;
  std::size_t order = 0;
  double step = 1.0;
  std::optional<double> angle;
  auto* lsys = render->add_subcommand("lsystem", "L-system through turtle graphics");
  auto* rules_opt = lsys->add_option("--rules-file", rules_file, "axiom = ..., angle = ..., X -> ...");
  auto* preset_opt = lsys->add_option("--preset", preset, "koch, koch-snowflake, sierpinski, plant, hilbert, fibonacci-ab");
  rules_opt->excludes(preset_opt);
  lsys->add_option("--order", order);
  lsys->add_option("--step", step);
  lsys->add_option("--angle", angle);
  lsys->add_option("--out", out_path);

  std::uint32_t stitch_n = 10;
  std::string stitch_style = "perpendicular";
  auto* stitch = render->add_subcommand("stitch", "Curve stitching");
  stitch->add_option("-n", stitch_n)->required();
  stitch->add_option("--style", stitch_style)->check(CLI::IsMember({"perpendicular", "v", "star"}));
  stitch->add_option("--out", out_path);

  double tree_len = 100;
  double tree_theta = 20;
  double tree_dec = 10;
  double tree_min = 5;
  auto* tree = render->add_subcommand("tree", "Recursive turtle tree");
  tree->add_option("--len", tree_len)->required();
  tree->add_option("--theta", tree_theta)->required();
  tree->add_option("--decrement", tree_dec);
  tree->add_option("--min-len", tree_min);
  tree->add_option("--out", out_path);

  std::uint32_t skip_n = 10;
  std::uint32_t skip = 1;
  auto* skipc = render->add_subcommand("skip", "Skip counting around a circle");
  skipc->add_option("-n", skip_n)->required();
  skipc->add_option("--skip", skip)->required();
  skipc->add_option("--out", out_path);

  // ---- estimate ----
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimators");
  estimate->require_subcommand(1);
  std::uint64_t drops = 1'000'000;
  std::uint64_t seed = 0;
  double needle = 1.0;
  double spacing = 1.0;
  auto* pi = estimate->add_subcommand("pi", "Buffon's needle");
  pi->add_option("--drops", drops);
  pi->add_option("--seed", seed);
  pi->add_option("--length", needle);
  pi->add_option("--spacing", spacing);

  // ---- serve ----
  std::optional<int> port;
  std::string host = "127.0.0.1";
  std::int64_t ttl_seconds = 3600;
  std::string snapshot;
  std::string ui_dir;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", port, "Port (default: $PORT or 8080)");
  serve->add_option("--host", host);
  serve->add_option("--ttl", ttl_seconds, "Session idle timeout in seconds");
  serve->add_option("--snapshot", snapshot, "Append-only session log");
  serve->add_option("--ui-dir", ui_dir, "Static files served under /ui");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*nim) {
      mp_analysis* a = nullptr;
      check(mp_nim_analyze(heaps.data(), heaps.size(), &a));
      if (json) {
        CString s;
        check(mp_analysis_to_json(a, &s.p));
        emit_json(s.str());
      } else {
        std::cout << "outcome: " << (mp_analysis_outcome(a) == MP_FIRST ? "First" : "Second") << "\n";
        std::cout << "grundy: " << mp_analysis_grundy(a) << "\n";
        std::size_t heap = 0;
        std::uint64_t take = 0;
        if (mp_analysis_move_count(a) > 0 && mp_analysis_move(a, 0, &heap, &take) == MP_OK) {
          std::cout << "move: heap " << heap + 1 << " take " << take << "\n";
        } else {
          std::cout << "move: none\n";
        }
      }
      mp_analysis_free(a);
    } else if (*make) {
      const auto moves = split_moves(moves_text);
      mp_analysis* a = nullptr;
      check(mp_subtraction_analyze(target, moves.data(), moves.size(), remaining.value_or(target), &a));
      if (json) {
        CString s;
        check(mp_analysis_to_json(a, &s.p));
        emit_json(s.str());
      } else {
        std::cout << "outcome: " << (mp_analysis_outcome(a) == MP_FIRST ? "First" : "Second") << "\n";
        std::cout << "grundy: " << mp_analysis_grundy(a) << "\n";
        std::uint64_t take = 0;
        if (mp_analysis_move_count(a) > 0 && mp_analysis_move(a, 0, nullptr, &take) == MP_OK) {
          std::cout << "move: add " << take << "\n";
        } else {
          std::cout << "move: none\n";
        }
      }
      mp_analysis_free(a);
    } else if (*sudoku) {
      std::uint8_t grid[16];
      check(mp_sudoku4_parse(read_file(grid_file).c_str(), grid));
      if (json) {
        std::string g;
        for (auto v : grid) g.push_back(static_cast<char>('0' + v));
        emit_json(service_call("GET", "/api/puzzle/sudoku4?grid=" + g + "&limit=" + std::to_string(sudoku_limit)));
      } else {
        std::vector<std::uint8_t> solutions(16 * sudoku_limit);
        std::size_t reported = 0;
        std::size_t total = 0;
        check(mp_sudoku4_solve(grid, sudoku_limit, solutions.data(), &reported, &total));
        std::cout << "solutions: " << total << "\n";
        for (std::size_t i = 0; i < reported; ++i) std::cout << "solution: " << grid_rows(&solutions[16 * i]) << "\n";
        if (total > reported) std::cout << "truncated: " << total - reported << " not shown\n";
      }
    } else if (*dominoes) {
      mp_tiling* t = nullptr;
      check(mp_dominoes_solve_text(read_file(board_file).c_str(), &t));
      Json tiling = Json::array();
      std::ostringstream text;
      for (std::size_t i = 0; i < mp_tiling_domino_count(t); ++i) {
        std::uint32_t c[4];
        mp_tiling_domino(t, i, c);
        tiling.push_back(Json::array({Json::array({c[0], c[1]}), Json::array({c[2], c[3]})}));
        text << "domino: " << c[0] << "," << c[1] << " " << c[2] << "," << c[3] << "\n";
      }
      const bool ok = mp_tiling_tileable(t) != 0;
      mp_tiling_free(t);
      if (json) {
        std::cout << Json{{"puzzle", "dominoes"}, {"tileable", ok}, {"tiling", tiling}}.dump(2) << "\n";
      } else {
        std::cout << "tileable: " << (ok ? "yes" : "no") << "\n" << text.str();
      }
    } else if (*graph) {
      const auto text = read_file(graph_file);
      if (json) {
        std::string target = "/api/puzzle/graph";
        if (!walks.empty()) {
          target += "?from=" + std::to_string(walks[0]) + "&to=" + std::to_string(walks[1]) +
                    "&length=" + std::to_string(walks[2]);
        }
        emit_json(service_call("POST", target, text));
      } else {
        mp_graph* g = nullptr;
        check(mp_graph_parse(text.c_str(), &g));
        const auto n = mp_graph_vertex_count(g);
        std::vector<std::size_t> degrees(n);
        mp_graph_degrees(g, degrees.data());
        mp_euler_class cls = MP_EULER_NONE;
        std::size_t start = 0;
        std::size_t end = 0;
        mp_graph_eulerian(g, &cls, &start, &end);
        int is_tree = 0;
        mp_graph_is_tree(g, &is_tree);
        std::cout << "vertices: " << n << "\nedges: " << mp_graph_edge_count(g) << "\ndegrees:";
        for (auto d : degrees) std::cout << " " << d;
        std::cout << "\neulerian: " << (cls == MP_EULER_CIRCUIT ? "Circuit" : cls == MP_EULER_PATH ? "Path" : "None");
        if (cls == MP_EULER_PATH) std::cout << " " << start << " " << end;
        std::cout << "\ntree: " << (is_tree ? "yes" : "no") << "\n";
        if (!walks.empty()) {
          std::uint64_t count = 0;
          const auto rc = mp_graph_count_walks(g, walks[0], walks[1], walks[2], &count);
          if (rc != MP_OK) mp_graph_free(g);
          check(rc);
          std::cout << "walks: " << count << "\n";
        }
        mp_graph_free(g);
      }
    } else if (*ants) {
      std::vector<double> positions;
      std::vector<int> headings;
      for (const auto& spec : ant_specs) {
        const auto colon = spec.find(':');
        double p = 0;
        int h = 0;
        const auto* hb = spec.data() + colon + 1;
        if (colon != std::string::npos && *hb == '+') ++hb;
        if (colon == std::string::npos ||
            std::from_chars(spec.data(), spec.data() + colon, p).ptr != spec.data() + colon ||
            std::from_chars(hb, spec.data() + spec.size(), h).ptr != spec.data() + spec.size()) {
          throw CLI::ValidationError("ants", "expected position:+1 or position:-1, got '" + spec + "'");
        }
        positions.push_back(p);
        headings.push_back(h);
      }
      double t = 0;
      check(mp_ants_clear_time(ant_length, ant_speed, positions.data(), headings.data(), positions.size(), &t));
      if (json) {
        std::cout << Json{{"puzzle", "ants"}, {"clearTime", t}, {"worstCase", ant_length / ant_speed}}.dump(2) << "\n";
      } else {
        std::cout << "clear-time: " << number(t) << "\nworst-case: " << number(ant_length / ant_speed) << "\n";
      }
    } else if (*dwarf) {
      const auto c = constraint == "equal" ? MP_HOPS_EQUAL : constraint == "any" ? MP_HOPS_ANY : MP_HOPS_RIGHT_EXCEEDS_UP;
      const bool ok = mp_dwarf_reachable(dwarf_x, dwarf_y, c) != 0;
      if (json) {
        std::cout << Json{{"puzzle", "dwarf"}, {"reachable", ok}}.dump(2) << "\n";
      } else {
        std::cout << "reachable: " << (ok ? "yes" : "no") << "\n";
      }
    } else if (*mandel) {
      int escaped = 0;
      std::uint32_t it = 0;
      check(mp_mandelbrot_escape(mre, mim, max_iter, &escaped, &it));
      if (json) {
        emit_json(service_call("GET", "/api/puzzle/mandelbrot?re=" + number(mre) + "&im=" + number(mim) +
                                          "&maxIter=" + std::to_string(max_iter)));
      } else if (escaped) {
        std::cout << "result: Escaped\niteration: " << it << "\n";
      } else {
        std::cout << "result: Bounded\n";
      }
    } else if (*fib || *pascal || *gauss || *recip || *resist) {
      if (*resist) {
        double m[4];
        int pd = 0;
        check(mp_resistor_matrix(resistances.data(), m, &pd));
        if (json) {
          std::string q = "/api/puzzle/resistors?";
          for (int i = 0; i < 5; ++i) q += (i ? "&r" : "r") + std::to_string(i + 1) + "=" + number(resistances[i]);
          emit_json(service_call("GET", q));
        } else {
          std::cout << "matrix: " << number(m[0]) << " " << number(m[1]) << " " << number(m[2]) << " " << number(m[3])
                    << "\npositive-definite: " << (pd ? "yes" : "no") << "\n";
        }
      } else if (json) {
        std::string q = *fib      ? "/api/puzzle/fibonacci?n=" + std::to_string(num_n)
                        : *pascal ? "/api/puzzle/pascal?n=" + std::to_string(num_n)
                        : *gauss  ? "/api/puzzle/gauss?n=" + std::to_string(num_n)
                                  : "/api/puzzle/reciprocal?base=" + std::to_string(recip_base) +
                                       "&count=" + std::to_string(recip_count);
        emit_json(service_call("GET", q));
      } else if (*fib) {
        std::uint64_t v = 0;
        check(mp_fibonacci(num_n, &v));
        std::cout << "value: " << v << "\n";
      } else if (*pascal) {
        if (num_n > 67) check(MP_OVERFLOW);
        std::vector<std::uint64_t> row(num_n + 1);
        check(mp_pascal_row(num_n, row.data()));
        std::cout << "row:";
        for (auto v : row) std::cout << " " << v;
        std::cout << "\n";
      } else if (*gauss) {
        std::uint64_t v = 0;
        check(mp_gauss_sum(num_n, &v));
        std::cout << "sum: " << v << "\n";
      } else {
        CString digits;
        check(mp_fib_reciprocal_digits(recip_base, recip_count, &digits.p));
        std::cout << "digits: " << digits.str() << "\n";
      }
    } else if (*count) {
      if (json) {
        emit_json(service_call("GET", "/api/puzzle/" + count_kind + "?n=" + std::to_string(count_n)));
      } else {
        const auto kind = count_kind == "squares" ? MP_COUNT_SQUARES
                          : count_kind == "rooks" ? MP_COUNT_ROOKS
                                                  : MP_COUNT_TRIANGLES;
        std::uint64_t v = 0;
        check(mp_count(kind, count_n, &v));
        std::cout << v << "\n";
      }
    } else if (*modular) {
      mp_drawing* d = nullptr;
      check(mp_render_modular(rn, rk, circle ? 1 : 0, &d));
      emit_drawing(d, out_path, json);
    } else if (*curve) {
      const auto kind = curve_kind == "cardioid" ? MP_CURVE_CARDIOID
                        : curve_kind == "cycloid" ? MP_CURVE_CYCLOID
                                                  : MP_CURVE_EPICYCLOID;
      mp_drawing* d = nullptr;
      if (kind == MP_CURVE_CYCLOID) {
        check(mp_render_curve(kind, radius, 0, samples, &d));
      } else {
        check(mp_render_curve(kind, fixed_radius, rolling_radius, samples, &d));
      }
      emit_drawing(d, out_path, json);
    } else if (*lsys) {
      mp_drawing* d = nullptr;
      if (!preset.empty()) {
        check(mp_render_lsystem_preset(preset.c_str(), &d));
      } else if (!rules_file.empty()) {
        check(mp_render_lsystem(read_file(rules_file).c_str(), order, step, angle.value_or(0), angle ? 1 : 0, &d));
      } else {
        throw CLI::RequiredError("--rules-file or --preset");
      }
      emit_drawing(d, out_path, json);
    } else if (*stitch) {
      const auto style = stitch_style == "v" ? MP_STITCH_V : stitch_style == "star" ? MP_STITCH_STAR : MP_STITCH_PERPENDICULAR;
      mp_drawing* d = nullptr;
      check(mp_render_stitch(stitch_n, style, &d));
      emit_drawing(d, out_path, json);
    } else if (*tree) {
      mp_drawing* d = nullptr;
      check(mp_render_tree(tree_len, tree_theta, tree_dec, tree_min, &d));
      emit_drawing(d, out_path, json);
    } else if (*skipc) {
      mp_drawing* d = nullptr;
      check(mp_render_skip(skip_n, skip, &d));
      emit_drawing(d, out_path, json);
    } else if (*pi) {
      if (json) {
        emit_json(service_call("GET", "/api/estimate/pi?drops=" + std::to_string(drops) + "&seed=" +
                                          std::to_string(seed) + "&length=" + number(needle) +
                                          "&spacing=" + number(spacing)));
      } else {
        double estimate_value = 0;
        std::uint64_t crossings = 0;
        check(mp_buffon_estimate(needle, spacing, drops, seed, &estimate_value, &crossings));
        std::cout << "estimate: " << number(estimate_value) << "\ncrossings: " << crossings << "\ndrops: " << drops
                  << "\nseed: " << seed << "\n";
      }
    } else if (*serve) {
      int listen_port = 8080;
      if (port) {
        listen_port = *port;
      } else if (const char* env = std::getenv("PORT")) {
        listen_port = std::atoi(env);
      }
      mp_service* svc = nullptr;
      check(mp_service_create(ttl_seconds * 1000, snapshot.empty() ? nullptr : snapshot.c_str(), &svc));
      // Handle SIGINT/SIGTERM on this thread only; the listener inherits the mask.
      sigset_t signals;
      sigemptyset(&signals);
      sigaddset(&signals, SIGINT);
      sigaddset(&signals, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &signals, nullptr);
      int bound = 0;
      const auto rc =
          mp_service_listen(svc, host.c_str(), listen_port, ui_dir.empty() ? nullptr : ui_dir.c_str(), &bound);
      if (rc != MP_OK) mp_service_free(svc);
      check(rc);
      std::cout << "listening: http://" << host << ":" << bound << std::endl;
      int sig = 0;
      sigwait(&signals, &sig);
      mp_service_free(svc);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  return 0;
}
