#include "mathplay/puzzles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "mathplay/error.hpp"
#include "text_util.hpp"

namespace mathplay::puzzles {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "count exceeds 64-bit range");
  return out;
}

void require_positive(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "board size must be at least 1");
}

}  // namespace

std::uint64_t count_subsquares(std::uint64_t n) {
  require_positive(n);
  // n(n+1)(2n+1)/6 with the divisions taken early to delay overflow.
  std::uint64_t a = n;
  std::uint64_t b = n + 1;
  std::uint64_t c = 2 * n + 1;
  if (a % 2 == 0) a /= 2; else b /= 2;
  if (a % 3 == 0) a /= 3; else if (b % 3 == 0) b /= 3; else c /= 3;
  return mul(mul(a, b), c);
}

std::uint64_t count_rook_placements(std::uint64_t n) {
  require_positive(n);
  std::uint64_t out = 1;
  for (std::uint64_t k = 2; k <= n; ++k) out = mul(out, k);
  return out;
}

std::uint64_t count_triangles(std::uint64_t n) {
  require_positive(n);
  // floor(n(n+2)(2n+1)/8); the product is exact in 128 bits for any n that
  // yields a 64-bit result.
  const auto product = static_cast<unsigned __int128>(n) * (n + 2) * (2 * n + 1) / 8;
  if (product > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::Overflow, "count exceeds 64-bit range");
  }
  return static_cast<std::uint64_t>(product);
}

Board::Board(std::uint32_t width, std::uint32_t height, std::set<Cell> removed)
    : width_(width), height_(height), removed_(std::move(removed)) {
  if (width_ == 0 || height_ == 0) throw Error(ErrorCode::InvalidArgument, "board dimensions must be positive");
  for (const auto& c : removed_) {
    if (c.col >= width_ || c.row >= height_) {
      throw Error(ErrorCode::InvalidArgument, "removed cell (" + std::to_string(c.col) + "," +
                                                  std::to_string(c.row) + ") is off the board");
    }
  }
}

Board parse_board(std::string_view text) {
  const auto toks = text_util::tokens(text);
  if (toks.size() < 2 || toks.size() % 2 != 0) {
    throw Error(ErrorCode::ParseError, "expected \"width height\" followed by col/row pairs");
  }
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  if (!text_util::parse_uint(toks[0], width) || !text_util::parse_uint(toks[1], height)) {
    throw Error(ErrorCode::ParseError, "board dimensions must be non-negative integers");
  }
  std::set<Cell> removed;
  for (std::size_t i = 2; i < toks.size(); i += 2) {
    Cell c;
    if (!text_util::parse_uint(toks[i], c.col) || !text_util::parse_uint(toks[i + 1], c.row)) {
      throw Error(ErrorCode::ParseError, "removed cells must be non-negative integer pairs");
    }
    removed.insert(c);
  }
  try {
    return Board(width, height, std::move(removed));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

namespace {

class DominoSearch {
 public:
  DominoSearch(std::uint32_t width, std::uint32_t height, std::vector<bool> filled)
      : width_(width), height_(height), filled_(std::move(filled)) {}

  bool run() { return place_from(0); }
  std::vector<std::pair<std::size_t, std::size_t>> placements() const { return placed_; }

 private:
  bool place_from(std::size_t pos) {
    while (pos < filled_.size() && filled_[pos]) ++pos;
    if (pos == filled_.size()) return true;
    const auto key = std::make_pair(pos, frontier_mask(pos));
    if (failed_.contains(key)) return false;

    const std::size_t col = pos % width_;
    const std::size_t row = pos / width_;
    if (col + 1 < width_ && !filled_[pos + 1] && try_place(pos, pos + 1)) return true;
    if (row + 1 < height_ && !filled_[pos + width_] && try_place(pos, pos + width_)) return true;
    failed_.insert(key);
    return false;
  }

  // Cells before the first empty one are all filled and cells more than one
  // row ahead are untouched, so (position, next width+1 cells) identifies the
  // remaining subproblem.
  std::uint64_t frontier_mask(std::size_t pos) const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i <= width_ && pos + i < filled_.size(); ++i) {
      if (filled_[pos + i]) mask |= std::uint64_t{1} << i;
    }
    return mask;
  }

  bool try_place(std::size_t a, std::size_t b) {
    filled_[a] = filled_[b] = true;
    placed_.emplace_back(a, b);
    if (place_from(a + 1)) return true;
    placed_.pop_back();
    filled_[a] = filled_[b] = false;
    return false;
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<std::size_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.second * 0x9E3779B97F4A7C15ull ^ k.first);
    }
  };

  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<bool> filled_;
  std::vector<std::pair<std::size_t, std::size_t>> placed_;
  std::unordered_set<std::pair<std::size_t, std::uint64_t>, KeyHash> failed_;
};

}  // namespace

TilingResult domino_tileable(const Board& board, TilingOptions options) {
  TilingResult result;
  if (board.open_cells() % 2 != 0) return result;
  if (options.coloring_shortcut) {
    std::size_t dark = 0;
    for (std::uint32_t r = 0; r < board.height(); ++r) {
      for (std::uint32_t c = 0; c < board.width(); ++c) {
        if (board.is_open({c, r}) && (c + r) % 2 == 0) ++dark;
      }
    }
    if (2 * dark != board.open_cells()) return result;
  }

  // Search runs along the shorter side so the frontier fits in 64 bits.
  const bool transposed = board.width() > board.height();
  const std::uint32_t w = transposed ? board.height() : board.width();
  const std::uint32_t h = transposed ? board.width() : board.height();
  if (w > 62) throw Error(ErrorCode::InvalidArgument, "board too large for domino search");

  std::vector<bool> filled(std::size_t{w} * h, false);
  for (const auto& c : board.removed()) {
    const std::size_t col = transposed ? c.row : c.col;
    const std::size_t row = transposed ? c.col : c.row;
    filled[row * w + col] = true;
  }
  DominoSearch search(w, h, std::move(filled));
  if (!search.run()) return result;

  result.tileable = true;
  for (const auto& [a, b] : search.placements()) {
    auto to_cell = [&](std::size_t idx) {
      const auto col = static_cast<std::uint32_t>(idx % w);
      const auto row = static_cast<std::uint32_t>(idx / w);
      return transposed ? Cell{row, col} : Cell{col, row};
    };
    result.tiling.push_back({to_cell(a), to_cell(b)});
  }
  return result;
}

SudokuGrid4 parse_sudoku4(std::string_view text) {
  const auto toks = text_util::tokens(text);
  SudokuGrid4 grid{};
  auto set_cell = [&](std::size_t idx, char ch) {
    if (ch == '.') ch = '0';
    if (ch < '0' || ch > '4') throw Error(ErrorCode::ParseError, "cell values must be 0..4");
    grid[idx] = static_cast<std::uint8_t>(ch - '0');
  };
  if (toks.size() == 16) {
    for (std::size_t i = 0; i < 16; ++i) {
      if (toks[i].size() != 1) throw Error(ErrorCode::ParseError, "cell values must be 0..4");
      set_cell(i, toks[i][0]);
    }
  } else if (toks.size() == 4 && std::all_of(toks.begin(), toks.end(), [](auto t) { return t.size() == 4; })) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) set_cell(r * 4 + c, toks[r][c]);
    }
  } else {
    throw Error(ErrorCode::ParseError, "expected 16 cell values or 4 rows of 4 digits");
  }
  return grid;
}

namespace {

constexpr std::size_t box_of(std::size_t idx) { return (idx / 8) * 2 + (idx % 4) / 2; }

bool can_place(const SudokuGrid4& g, std::size_t idx, std::uint8_t value) {
  for (std::size_t j = 0; j < 16; ++j) {
    if (j == idx || g[j] != value) continue;
    if (j / 4 == idx / 4 || j % 4 == idx % 4 || box_of(j) == box_of(idx)) return false;
  }
  return true;
}

void enumerate(SudokuGrid4& g, std::size_t idx, SudokuReport& report, std::size_t cap) {
  while (idx < 16 && g[idx] != 0) ++idx;
  if (idx == 16) {
    ++report.total;
    if (report.solutions.size() < cap) report.solutions.push_back(g);
    return;
  }
  for (std::uint8_t v = 1; v <= 4; ++v) {
    if (!can_place(g, idx, v)) continue;
    g[idx] = v;
    enumerate(g, idx + 1, report, cap);
    g[idx] = 0;
  }
}

}  // namespace

bool sudoku4_consistent(const SudokuGrid4& grid) noexcept {
  for (std::size_t i = 0; i < 16; ++i) {
    if (grid[i] > 4) return false;
    if (grid[i] != 0 && !can_place(grid, i, grid[i])) return false;
  }
  return true;
}

SudokuReport solve_sudoku4(const SudokuGrid4& grid, std::size_t max_reported) {
  if (!sudoku4_consistent(grid)) throw Error(ErrorCode::InvalidGivens, "given cells conflict");
  SudokuReport report;
  SudokuGrid4 work = grid;
  enumerate(work, 0, report, max_reported);
  return report;
}

double ants_clear_time(const AntConfig& config) {
  const double length = config.scale_length;
  const double speed = config.speed;
  if (!(length > 0) || !std::isfinite(length)) throw Error(ErrorCode::InvalidArgument, "scale length must be positive");
  if (!(speed > 0) || !std::isfinite(speed)) throw Error(ErrorCode::InvalidArgument, "speed must be positive");

  std::vector<Ant> ants = config.ants;
  for (const auto& a : ants) {
    if (!(a.position >= 0 && a.position <= length)) {
      throw Error(ErrorCode::InvalidArgument, "ant position off the scale");
    }
  }
  // Coincident ants are ordered left-mover first so they separate without a
  // collision event; identities never affect the clear time.
  std::sort(ants.begin(), ants.end(), [](const Ant& a, const Ant& b) {
    if (a.position != b.position) return a.position < b.position;
    return static_cast<int>(a.heading) < static_cast<int>(b.heading);
  });

  const double tie = 1e-15 * length / speed;
  double now = 0.0;
  while (true) {
    std::erase_if(ants, [&](const Ant& a) {
      return (a.heading == Heading::Left && a.position <= 0) || (a.heading == Heading::Right && a.position >= length);
    });
    if (ants.empty()) return now;

    double step = std::numeric_limits<double>::infinity();
    for (const auto& a : ants) {
      const double exit = a.heading == Heading::Left ? a.position : length - a.position;
      step = std::min(step, exit / speed);
    }
    for (std::size_t i = 0; i + 1 < ants.size(); ++i) {
      if (ants[i].heading == Heading::Right && ants[i + 1].heading == Heading::Left) {
        step = std::min(step, (ants[i + 1].position - ants[i].position) / (2 * speed));
      }
    }

    std::vector<std::size_t> colliding;
    for (std::size_t i = 0; i + 1 < ants.size(); ++i) {
      if (ants[i].heading == Heading::Right && ants[i + 1].heading == Heading::Left &&
          (ants[i + 1].position - ants[i].position) / (2 * speed) <= step + tie) {
        colliding.push_back(i);
      }
    }
    for (auto& a : ants) {
      a.position += static_cast<int>(a.heading) * speed * step;
      a.position = std::clamp(a.position, 0.0, length);
    }
    for (auto i : colliding) {
      const double meet = 0.5 * (ants[i].position + ants[i + 1].position);
      ants[i] = {meet, Heading::Left};
      ants[i + 1] = {meet, Heading::Right};
    }
    now += step;
  }
}

double worst_case_clear_time(double scale_length, double speed) {
  if (!(scale_length > 0) || !(speed > 0)) throw Error(ErrorCode::InvalidArgument, "length and speed must be positive");
  return scale_length / speed;
}

bool dwarf_reachable(std::int64_t x, std::int64_t y, HopConstraint constraint) noexcept {
  switch (constraint) {
    case HopConstraint::EqualHops: return x == y;
    case HopConstraint::RightExceedsUp: return x > y;
    case HopConstraint::Unconstrained: return true;
  }
  return false;
}

}  // namespace mathplay::puzzles
