#pragma once

// Counting puzzles, domino tiling, 4x4 Sudoku, ants on a scale and
// lattice reachability.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace mathplay::puzzles {

// Number of axis-aligned k x k squares (k = 1..n) on an n x n board.
std::uint64_t count_subsquares(std::uint64_t n);

// Non-attacking placements of n rooks on an n x n board (n!). Overflow past n = 20.
std::uint64_t count_rook_placements(std::uint64_t n);

// Triangles of every size and both orientations in an equilateral triangle
// cut into n rows of unit triangles.
std::uint64_t count_triangles(std::uint64_t n);

struct Cell {
  std::uint32_t col = 0;
  std::uint32_t row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Board {
 public:
  // Throws InvalidArgument for empty dimensions or removed cells out of bounds.
  Board(std::uint32_t width, std::uint32_t height, std::set<Cell> removed = {});

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  const std::set<Cell>& removed() const noexcept { return removed_; }
  bool is_open(Cell c) const { return !removed_.contains(c); }
  std::size_t open_cells() const noexcept { return std::size_t{width_} * height_ - removed_.size(); }

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::set<Cell> removed_;
};

// "width height" followed by "col row" pairs of removed cells; '#' comments.
Board parse_board(std::string_view text);

struct Domino {
  Cell first;
  Cell second;

  friend bool operator==(const Domino&, const Domino&) = default;
};

struct TilingResult {
  bool tileable = false;
  std::vector<Domino> tiling;
};

struct TilingOptions {
  // Reject boards with unequal checkerboard color counts before searching.
  bool coloring_shortcut = true;
};

// First-empty-cell backtracking, horizontal before vertical. The frontier of
// each failed state is memoized so long boards stay tractable.
TilingResult domino_tileable(const Board& board, TilingOptions options = {});

// Row-major 4x4 grid; 0 marks an empty cell.
using SudokuGrid4 = std::array<std::uint8_t, 16>;

struct SudokuReport {
  std::vector<SudokuGrid4> solutions;  // at most the requested cap
  std::size_t total = 0;               // every completion, counted exhaustively
  bool truncated() const noexcept { return total > solutions.size(); }
};

// 16 integers in 0..4, or four 4-digit rows; '.' also marks a blank, '#' starts a comment. Throws ParseError.
SudokuGrid4 parse_sudoku4(std::string_view text);

// True when no two filled cells conflict in a row, column or 2x2 box.
bool sudoku4_consistent(const SudokuGrid4& grid) noexcept;

// Throws InvalidGivens when the filled cells already conflict.
SudokuReport solve_sudoku4(const SudokuGrid4& grid, std::size_t max_reported = 32);

enum class Heading : int { Left = -1, Right = 1 };

struct Ant {
  double position = 0.0;
  Heading heading = Heading::Right;
};

struct AntConfig {
  double scale_length = 1.0;
  double speed = 1.0;
  std::vector<Ant> ants;
};

// Event simulation with head-on collisions reversing both ants. Throws
// InvalidArgument for non-positive length/speed or positions off the scale.
double ants_clear_time(const AntConfig& config);

double worst_case_clear_time(double scale_length, double speed);

enum class HopConstraint { EqualHops, RightExceedsUp, Unconstrained };

bool dwarf_reachable(std::int64_t x, std::int64_t y, HopConstraint constraint) noexcept;

}  // namespace mathplay::puzzles
