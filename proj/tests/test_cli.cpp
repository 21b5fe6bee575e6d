// Runs the built CLI as a subprocess.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef MATHPLAY_CLI
#error "MATHPLAY_CLI must name the built executable"
#endif
#ifndef MATHPLAY_GOLDEN_DIR
#error "MATHPLAY_GOLDEN_DIR must name the golden SVG directory"
#endif

namespace {

struct Run {
  std::string out;
  int code = -1;
};

// stderr is discarded unless the caller redirects it.
Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(MATHPLAY_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "mathplay-cli-tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("games") {
  auto r = run("solve nim 5 6 7");
  CHECK(r.code == 0);
  CHECK(r.out == "outcome: First\ngrundy: 4\nmove: heap 1 take 4\n");
  r = run("solve nim 1 2 3");
  CHECK(r.out == "outcome: Second\ngrundy: 0\nmove: none\n");
  r = run("solve make 10 --moves 1,2");
  CHECK(r.out == "outcome: First\ngrundy: 1\nmove: add 1\n");
  r = run("solve make 15 --moves 1,2");
  CHECK(r.out.rfind("outcome: Second\n", 0) == 0);
  r = run("--json solve nim 5 6 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"outcome\": \"First\"") != std::string::npos);
}

TEST_CASE("counts") {
  CHECK(run("count squares 8").out == "204\n");
  CHECK(run("count rooks 8").out == "40320\n");
  CHECK(run("count triangles 5").out == "48\n");
  CHECK(run("count triangles 25").out == "4303\n");
}

TEST_CASE("puzzles from files") {
  const auto graph = write_temp("walk.graph", "4\n0 0\n0 1\n1 2\n1 3\n2 3\n");
  auto r = run("solve graph " + graph + " --walks 1,1,4");
  CHECK(r.code == 0);
  CHECK(r.out == "vertices: 4\nedges: 5\ndegrees: 3 3 2 2\neulerian: Path 0 1\ntree: no\nwalks: 12\n");

  const auto sudoku = write_temp("grid.txt", "1234\n3412\n4321\n2143\n");
  CHECK(run("solve sudoku4 " + sudoku).out == "solutions: 1\nsolution: 1234 3412 4321 2143\n");

  const auto board = write_temp("corners.board", "8 8\n0 0\n7 7\n");
  r = run("solve dominoes " + board);
  CHECK(r.code == 0);
  CHECK(r.out == "tileable: no\n");

  CHECK(run("solve ants --length 1 --speed 1 0.2:+1 0.5:-1 0.8:-1").out == "clear-time: 0.8\nworst-case: 1\n");
  CHECK(run("solve dwarf 5 4").out == "reachable: no\n");
  CHECK(run("solve mandelbrot -- -1 0").out == "result: Bounded\n");
  CHECK(run("solve mandelbrot 1 0").out == "result: Escaped\niteration: 3\n");
  CHECK(run("solve fibonacci 10").out == "value: 55\n");
  CHECK(run("solve pascal 4").out == "row: 1 4 6 4 1\n");
  CHECK(run("solve gauss 100").out == "sum: 5050\n");
  CHECK(run("solve reciprocal --base 10 --count 8").out.find("01123595") != std::string::npos);
  CHECK(run("solve resistors 1 2 3 4 5").out == "matrix: 7 2 2 10\npositive-definite: yes\n");
}

TEST_CASE("estimate") {
  const auto r = run("estimate pi --drops 1000000 --seed 42");
  CHECK(r.code == 0);
  CHECK(r.out.find("estimate: 3.14") != std::string::npos);
  CHECK(r.out == run("estimate pi --drops 1000000 --seed 42").out);
}

TEST_CASE("renders match the golden files byte for byte") {
  const std::string golden = MATHPLAY_GOLDEN_DIR;
  const std::pair<const char*, const char*> cases[] = {
      {"render modular -n 360 -k 2", "modular-360-2.svg"},
      {"render modular -n 10 -k 3 --circle", "modular-10-3-circle.svg"},
      {"render lsystem --preset koch", "koch-4.svg"},
      {"render lsystem --preset sierpinski", "sierpinski-8.svg"},
      {"render lsystem --preset hilbert", "hilbert-6.svg"},
      {"render curve --kind cardioid --samples 721", "cardioid.svg"},
      {"render curve --kind epicycloid --fixed-radius 5 --rolling-radius 2", "epicycloid-5-2.svg"},
      {"render stitch -n 20 --style star", "stitch-20-star.svg"},
      {"render tree --len 60 --theta 25 --decrement 10 --min-len 5", "tree-60.svg"},
      {"render skip -n 10 --skip 1", "skip-10-1.svg"},
  };
  for (const auto& [args, file] : cases) {
    CAPTURE(args);
    const auto first = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == run(args).out);
    CHECK(first.out == slurp(golden + "/" + file));
  }
}

TEST_CASE("render to a file") {
  const auto out = (std::filesystem::temp_directory_path() / "mathplay-cli-tests" / "koch.svg").string();
  std::filesystem::create_directories(std::filesystem::path(out).parent_path());
  const auto r = run("render lsystem --preset koch --out " + out);
  CHECK(r.code == 0);
  CHECK(r.out == "wrote: " + out + "\npolylines: 1\nsegments: 256\n");
  CHECK(slurp(out) == slurp(std::string(MATHPLAY_GOLDEN_DIR) + "/koch-4.svg"));

  const auto rules = write_temp("koch.rules", "axiom = F\nF -> F-F++F-F\nangle = 60\n");
  CHECK(run("render lsystem --rules-file " + rules + " --order 2").code == 0);
}

TEST_CASE("exit codes") {
  // Domain errors exit 1 with the error code on stderr.
  auto r = run("count rooks 25", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("Overflow") != std::string::npos);
  const auto dup = write_temp("dup.rules", "axiom = F\nF -> F\nF -> G\n");
  r = run("render lsystem --rules-file " + dup, true);
  CHECK(r.code == 1);
  CHECK(r.out.find("DuplicateRule") != std::string::npos);
  CHECK(run("render modular -n 1 -k 2").code == 1);
  CHECK(run("solve graph /nonexistent/file").code == 1);
  CHECK(run("estimate pi --length 2 --spacing 1").code == 1);

  // Usage errors exit 2 and print help.
  r = run("frobnicate", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("Usage:") != std::string::npos);
  CHECK(run("solve nim").code == 2);
  CHECK(run("count squares notanumber").code == 2);
  CHECK(run("render curve --kind spiral").code == 2);
  CHECK(run("--help").code == 0);
}
