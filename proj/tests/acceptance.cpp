// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mathplay/curves.hpp"
#include "mathplay/error.hpp"
#include "mathplay/games.hpp"
#include "mathplay/graphs.hpp"
#include "mathplay/lsystem.hpp"
#include "mathplay/numerics.hpp"
#include "mathplay/puzzles.hpp"
#include "mathplay/service.hpp"
#include "oracles.hpp"

using namespace mathplay;

namespace {

// Collects failed checks for the criterion being run.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  const char* name;
  double time_limit_s;  // 0 for no limit
  std::function<void(Checker&)> body;
};

std::vector<std::uint64_t> entries(const graphs::SquareMatrix& m) {
  std::vector<std::uint64_t> out;
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c) out.push_back(m.at(r, c));
  return out;
}

void walk_figure_matrices(Checker& c) {
  const graphs::Graph g(4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 3}});
  const auto a = graphs::adjacency_matrix(g);
  c.expect(entries(a) == std::vector<std::uint64_t>{1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0}, "A");
  c.expect(entries(graphs::matrix_power(a, 2)) ==
               std::vector<std::uint64_t>{2, 1, 1, 1, 1, 3, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2},
           "A^2");
  c.expect(entries(graphs::matrix_power(a, 3)) ==
               std::vector<std::uint64_t>{3, 4, 2, 2, 4, 3, 4, 4, 2, 4, 2, 3, 2, 4, 3, 2},
           "A^3");
  c.expect(entries(graphs::matrix_power(a, 4)) ==
               std::vector<std::uint64_t>{7, 7, 6, 6, 7, 12, 7, 7, 6, 7, 7, 6, 6, 7, 6, 7},
           "A^4");
  c.expect(graphs::count_walks(g, 1, 1, 2) == 3, "walks(v2,v2,2) = 3");
  c.expect(graphs::count_walks(g, 1, 1, 4) == 12, "walks(v2,v2,4) = 12");
}

void game_oracle(Checker& c) {
  oracle::NimTree tree;
  std::size_t positions = 0;
  for (std::size_t heaps = 0; heaps <= 3; ++heaps) {
    games::Heaps h(heaps, 0);
    while (true) {
      const bool first = games::analyze_nim(h).outcome == games::Outcome::First;
      if (first != tree.mover_wins(h)) c.expect(false, "nim disagrees with game tree");
      ++positions;
      std::size_t i = 0;
      while (i < heaps && h[i] == 7) h[i++] = 0;
      if (i == heaps) break;
      ++h[i];
    }
  }
  c.expect(positions == 585, "585 positions searched");
  const games::SubtractionGame g(60, {1, 2});
  for (std::uint64_t n = 0; n <= 60; ++n) {
    if (games::analyze_subtraction(g, n).grundy != n % 3) c.expect(false, "grundy {1,2} != n mod 3 at " + std::to_string(n));
  }
}

void strategy_claims(Checker& c) {
  for (std::uint64_t a = 0; a <= 12; ++a) {
    for (std::uint64_t b = 0; b <= 12; ++b) {
      const auto outcome = games::analyze_nim({a, b}).outcome;
      const auto expected = a == b ? games::Outcome::Second : games::Outcome::First;
      if (outcome != expected) c.expect(false, "two-heap claim fails at " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  const games::SubtractionGame ten(10, {1, 2});
  const auto make10 = games::analyze_subtraction(ten);
  c.expect(make10.outcome == games::Outcome::First, "Make-10 is a first-player win");
  c.expect(!make10.optimal_moves.empty() && make10.optimal_moves.front().take == 1, "Make-10 opens with 1");
  c.expect(games::analyze_subtraction(games::SubtractionGame(15, {1, 2})).outcome == games::Outcome::Second,
           "Make-15 is a second-player win");
}

void eulerian(Checker& c) {
  const graphs::Graph konigsberg(4, {{0, 2}, {0, 2}, {1, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  c.expect(std::holds_alternative<graphs::NotEulerian>(graphs::eulerian_class(konigsberg)), "Konigsberg is None");

  // Corpus: trails laid down by random walks (closed or open) plus unconstrained multigraphs.
  std::mt19937_64 rng(2024);
  int circuits = 0;
  int paths = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 3 + rng() % 6;
    oracle::Edges edges;
    if (i % 3 == 2) {
      for (std::size_t e = 0, m = 2 + rng() % 10; e < m; ++e) edges.push_back({rng() % n, rng() % n});
    } else {
      std::size_t at = rng() % n;
      const std::size_t origin = at;
      for (std::size_t e = 0, m = 3 + rng() % 12; e < m; ++e) {
        const std::size_t next = rng() % n;
        edges.push_back({at, next});
        at = next;
      }
      if (i % 3 == 0 && at != origin) edges.push_back({at, origin});
    }
    const graphs::Graph g(n, edges);
    const auto cls = graphs::eulerian_class(g);
    if (std::holds_alternative<graphs::NotEulerian>(cls)) continue;
    std::size_t start = edges[0].first;
    if (const auto* p = std::get_if<graphs::EulerPath>(&cls)) start = p->start;
    const auto trail = oracle::euler_trail(n, edges, start);
    const bool covered = oracle::trail_covers(trail, edges);
    if (std::holds_alternative<graphs::EulerCircuit>(cls)) {
      ++circuits;
      c.expect(covered && trail.front() == trail.back(), "circuit witness for graph " + std::to_string(i));
    } else {
      ++paths;
      c.expect(covered && trail.back() == std::get<graphs::EulerPath>(cls).end,
               "path witness for graph " + std::to_string(i));
    }
  }
  c.expect(circuits >= 20 && paths >= 20, "corpus exercises both circuits and paths");
}

void puzzle_counts(Checker& c) {
  c.expect(puzzles::count_subsquares(8) == 204, "squares(8) = 204");
  for (std::uint64_t n = 1; n <= 10; ++n) c.expect(puzzles::count_subsquares(n) == oracle::enumerate_subsquares(n), "squares oracle");
  c.expect(puzzles::count_rook_placements(8) == 40320, "rooks(8) = 40320");
  for (int n = 1; n <= 6; ++n) c.expect(puzzles::count_rook_placements(n) == oracle::enumerate_rooks(n), "rooks oracle");
  c.expect(puzzles::count_triangles(5) == 48, "triangles(5) = 48");
  for (int n = 1; n <= 12; ++n) c.expect(puzzles::count_triangles(n) == oracle::enumerate_triangles(n), "triangles oracle");
  const puzzles::Board corners(4, 4, {{0, 0}, {3, 3}});
  c.expect(!puzzles::domino_tileable(corners).tileable, "4x4 minus corners untileable");
  c.expect(!puzzles::domino_tileable(corners, {.coloring_shortcut = false}).tileable, "untileable by search");
  c.expect(puzzles::worst_case_clear_time(1.0, 1.0) == 1.0, "worst case L/v = 1");

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double length = 0.5 + 2 * unit(rng);
    const double speed = 0.25 + unit(rng);
    puzzles::AntConfig config{length, speed, {}};
    std::vector<std::pair<double, int>> plain;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 40); i < n; ++i) {
      const double pos = length * unit(rng);
      const int dir = rng() % 2 ? 1 : -1;
      config.ants.push_back({pos, dir > 0 ? puzzles::Heading::Right : puzzles::Heading::Left});
      plain.push_back({pos, dir});
    }
    const double t = puzzles::ants_clear_time(config);
    if (std::abs(t - oracle::ants_pass_through(length, speed, plain)) >= 1e-9) c.expect(false, "ant simulation mismatch");
    if (t > length / speed + 1e-12) c.expect(false, "ant time beyond L/v");
  }
}

void lsystem_conformance(Checker& c) {
  const auto fib = lsystem::parse("axiom = A\nA -> AB\nB -> A\n");
  c.expect(lsystem::expand(fib, 3) == "ABAAB", "order 3 = ABAAB");
  std::size_t a = 1;
  std::size_t b = 2;
  for (std::size_t k = 0; k <= 10; ++k) {
    c.expect(lsystem::expand(fib, k).size() == a, "Fibonacci length at order " + std::to_string(k));
    b = a + b;
    a = b - a;
  }
  const auto koch = lsystem::parse("axiom = F\nF -> F-F++F-F\nangle = 60\n");
  std::size_t power = 1;
  for (std::size_t k = 0; k <= 6; ++k, power *= 4) {
    const auto word = lsystem::expand(koch, k);
    c.expect(static_cast<std::size_t>(std::count(word.begin(), word.end(), 'F')) == power, "Koch F count 4^k");
  }
  const auto plant = lsystem::parse("axiom = X\nangle = 25\nX -> F-[[X]+X]+F[+FX]-X\nF -> FF\n");
  for (std::size_t k = 0; k <= 6; ++k) {
    long depth = 0;
    bool ok = true;
    for (char ch : lsystem::expand(plant, k)) {
      depth += ch == '[' ? 1 : ch == ']' ? -1 : 0;
      ok = ok && depth >= 0;
    }
    c.expect(ok && depth == 0, "plant bracket balance at order " + std::to_string(k));
  }
  for (double step : {1.0, 0.25, 10.0}) {
    lsystem::RenderSpec spec;
    spec.order = 4;
    spec.step = step;
    spec.angle = 60;
    const auto d = lsystem::render(lsystem::parse("axiom = F++F++F\nF -> F-F++F-F\n"), spec);
    const auto& line = d.polylines.front();
    c.expect(d.polylines.size() == 1 &&
                 std::hypot(line.back().x - line.front().x, line.back().y - line.front().y) < 1e-6 * step,
             "snowflake closes");
  }
}

void numerics_checks(Checker& c) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-100, 100);
  std::uniform_real_distribution<double> angle(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const numerics::Point2 p[] = {{u(rng), u(rng)}};
    const double s = angle(rng);
    const double t = angle(rng);
    const double norm = std::hypot(p[0].x, p[0].y);
    const double tol = 1e-12 * std::max(1.0, norm);
    const auto once = numerics::rotate(p, s);
    const auto twice = numerics::rotate(once, t);
    const auto direct = numerics::rotate(p, s + t);
    if (std::abs(std::hypot(once[0].x, once[0].y) - norm) > tol) c.expect(false, "rotation preserves length");
    if (std::abs(twice[0].x - direct[0].x) > tol || std::abs(twice[0].y - direct[0].y) > tol) {
      c.expect(false, "rotation composes");
    }
  }
  std::uniform_real_distribution<double> r(0.01, 100);
  for (int trial = 0; trial < 1000; ++trial) {
    const numerics::ResistorSet set{r(rng), r(rng), r(rng), r(rng), r(rng)};
    const auto m = numerics::resistor_matrix(set);
    if (!numerics::is_positive_definite(m)) c.expect(false, "resistor matrix PD");
    const double x = u(rng);
    const double y = u(rng);
    const double direct = (set.r1 + set.r2 + set.r4) * x * x + 2 * set.r2 * x * y + (set.r2 + set.r3 + set.r5) * y * y;
    if (std::abs(numerics::quadratic_form(m, x, y) - direct) > 1e-9 * std::max(1.0, std::abs(direct)) ||
        !(numerics::quadratic_form(m, x, y) > 0)) {
      c.expect(false, "quadratic form agreement");
    }
  }
  std::uint64_t f0 = 0;
  std::uint64_t f1 = 1;
  std::uint64_t sum = 0;
  std::uint64_t squares = 0;
  for (std::uint64_t n = 1; n <= 40; ++n) {
    sum += f1;
    squares += f1 * f1;
    const auto next = f0 + f1;
    c.expect(numerics::fibonacci(n) == f1, "F(n)");
    c.expect(numerics::fib_sum_check(n) == std::pair{sum, sum}, "sum identity");
    c.expect(numerics::fib_square_sum_check(n) == std::pair{squares, f1 * next}, "square-sum identity");
    f0 = f1;
    f1 = next;
  }
  c.expect(numerics::fib_reciprocal_digits(10, 8) == "01123595", "1/89 digits");
}

void buffon(Checker& c) {
  const numerics::NeedleSpec spec{1.0, 1.0, 1'000'000, 42};
  const auto a = numerics::buffon_estimate(spec);
  const auto b = numerics::buffon_estimate(spec);
  c.expect(std::abs(a.pi_estimate - std::numbers::pi) < 0.02, "estimate within 0.02 of pi");
  c.expect(a.crossings == b.crossings && std::memcmp(&a.pi_estimate, &b.pi_estimate, sizeof(double)) == 0,
           "bit-identical reruns");
  char line[96];
  std::snprintf(line, sizeof line, "  (estimate %.9f, crossings %llu)", a.pi_estimate,
                static_cast<unsigned long long>(a.crossings));
  std::puts(line);
}

void mandelbrot(Checker& c) {
  c.expect(!curves::mandelbrot_escape({0, 0}, 1000).escaped, "c = 0 bounded");
  c.expect(!curves::mandelbrot_escape({-1, 0}, 1000).escaped, "c = -1 bounded");
  const auto one = curves::mandelbrot_escape({1, 0}, 1000);
  c.expect(one.escaped && one.iteration == 3, "c = 1 escapes at 3");
  const auto grid = curves::mandelbrot_grid(-2.0, 1.0, -1.5, 1.5, 200, 200, 100, 4);
  for (std::size_t row = 0; row < 200; ++row) {
    for (std::size_t col = 0; col < 200; ++col) {
      const double re = -2.0 + 3.0 * static_cast<double>(col) / 199;
      const double im = 1.5 - 3.0 * static_cast<double>(row) / 199;
      const auto res = grid[row * 200 + col];
      double zr = 0;
      double zi = 0;
      const std::uint32_t steps = res.escaped ? res.iteration : 100;
      bool ok = true;
      for (std::uint32_t k = 1; k <= steps; ++k) {
        const double nr = zr * zr - zi * zi + re;
        zi = 2 * zr * zi + im;
        zr = nr;
        const double mag2 = zr * zr + zi * zi;
        ok = ok && (k == steps && res.escaped ? mag2 > 4.0 : mag2 <= 4.0);
      }
      if (!ok) c.expect(false, "escape invariant at " + std::to_string(row) + "," + std::to_string(col));
    }
  }
}

std::pair<std::string, int> run_cli(const std::string& args) {
  const std::string cmd = std::string(MATHPLAY_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void determinism(Checker& c) {
  const std::string golden = MATHPLAY_GOLDEN_DIR;
  const std::pair<const char*, const char*> figures[] = {
      {"render modular -n 360 -k 2", "modular-360-2.svg"},
      {"render lsystem --preset koch", "koch-4.svg"},
      {"render modular -n 10 -k 3 --circle", "modular-10-3-circle.svg"},
      {"render lsystem --preset sierpinski", "sierpinski-8.svg"},
      {"render lsystem --preset hilbert", "hilbert-6.svg"},
      {"render curve --kind cardioid --samples 721", "cardioid.svg"},
      {"render curve --kind epicycloid --fixed-radius 5 --rolling-radius 2", "epicycloid-5-2.svg"},
      {"render stitch -n 20 --style star", "stitch-20-star.svg"},
      {"render tree --len 60 --theta 25 --decrement 10 --min-len 5", "tree-60.svg"},
      {"render skip -n 10 --skip 1", "skip-10-1.svg"},
  };
  for (const auto& [args, file] : figures) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    c.expect(first.second == 0 && !first.first.empty(), std::string("cli ran: ") + args);
    c.expect(first.first == second.first, std::string("cli repeat identical: ") + args);
    c.expect(first.first == slurp(golden + "/" + file), std::string("matches golden ") + file);
  }

  service::Api api;
  const std::pair<const char*, const char*> requests[] = {
      {"/api/render/modular-chords?n=360&k=2", "modular-360-2.svg"},
      {"/api/render/lsystem?order=4&angle=-60", "koch-4.svg"},
  };
  for (const auto& [target, file] : requests) {
    const bool post = std::strstr(target, "lsystem") != nullptr;
    const std::string body = post ? "axiom = F\nF -> F-F++F-F\n" : "";
    const auto first = api.handle(post ? "POST" : "GET", target, body);
    c.expect(first.status == 200, std::string("service ok: ") + target);
    for (int i = 0; i < 2; ++i) {
      c.expect(api.handle(post ? "POST" : "GET", target, body).body == first.body,
               std::string("service repeat identical: ") + target);
    }
    c.expect(first.body == slurp(golden + "/" + file), std::string("service matches golden ") + file);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"walk-figure regression: A, A^2, A^3, A^4 and walk counts", 1, walk_figure_matrices},
      {"game oracle equivalence: nim vs game tree, grundy {1,2} = n mod 3", 5, game_oracle},
      {"strategy claims: two-heap nim, Make-10, Make-15", 0, strategy_claims},
      {"eulerian: Konigsberg None, 100-graph corpus witnessed by trails", 0, eulerian},
      {"puzzle counts vs enumeration, dominoes, ants vs pass-through oracle", 30, puzzle_counts},
      {"l-system conformance: ABAAB, length law, 4^k, brackets, snowflake closure", 10, lsystem_conformance},
      {"numerics: rotation, resistor PD, Fibonacci identities, 1/89 digits", 0, numerics_checks},
      {"buffon: |estimate - pi| < 0.02 at n = 1e6, bit-identical reruns", 5, buffon},
      {"mandelbrot: 0 and -1 bounded, 1 escapes at 3, 200x200 invariant", 5, mandelbrot},
      {"determinism: CLI and service renders byte-identical, golden SVG suite", 0, determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(checker);
    } catch (const std::exception& e) {
      checker.failures.push_back(std::string("threw: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.time_limit_s > 0 && seconds > criterion.time_limit_s) {
      checker.failures.push_back("exceeded " + std::to_string(criterion.time_limit_s) + " s");
    }
    const bool pass = checker.failures.empty();
    failed += !pass;
    std::printf("%s [%2d] %s (%.3f s)\n", pass ? "PASS" : "FAIL", index, criterion.name, seconds);
    for (std::size_t i = 0; i < checker.failures.size() && i < 5; ++i) {
      std::printf("       - %s\n", checker.failures[i].c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
