#pragma once

// Impartial games under normal play (last mover wins): multi-heap Nim and
// single-pile subtraction games.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace mathplay::games {

// Ordered heap counts. Emptied heaps stay in place so indices are stable.
using Heaps = std::vector<std::uint64_t>;

struct NimMove {
  std::size_t heap_index = 0;
  std::uint64_t take = 0;

  friend bool operator==(const NimMove&, const NimMove&) = default;
};

enum class Outcome { First, Second };

struct GameAnalysis {
  Outcome outcome = Outcome::Second;
  std::uint64_t grundy = 0;
  // Every move to a zero-Grundy position, ordered by heap index then take.
  // For subtraction games heap_index is always 0 and take is the move size.
  std::vector<NimMove> optimal_moves;
};

// Grundy tables are materialized, so subtraction targets are bounded.
inline constexpr std::uint64_t kMaxSubtractionTarget = 10'000'000;

class SubtractionGame {
 public:
  // Throws InvalidArgument when `moves` is empty or contains 0.
  SubtractionGame(std::uint64_t target, std::set<std::uint64_t> moves);

  std::uint64_t target() const noexcept { return target_; }
  const std::set<std::uint64_t>& moves() const noexcept { return moves_; }

 private:
  std::uint64_t target_;
  std::set<std::uint64_t> moves_;
};

std::uint64_t nim_sum(const Heaps& heaps) noexcept;

GameAnalysis analyze_nim(const Heaps& heaps);

// Grundy value of a pile of `pile` objects; requires pile <= game.target().
std::uint64_t grundy_subtraction(const SubtractionGame& game, std::uint64_t pile);

// Grundy values for piles 0..game.target().
std::vector<std::uint64_t> grundy_table(const SubtractionGame& game);

// Analysis of the full pile (game.target() objects still to place).
GameAnalysis analyze_subtraction(const SubtractionGame& game);

// Analysis with `remaining` objects left; requires remaining <= target.
GameAnalysis analyze_subtraction(const SubtractionGame& game, std::uint64_t remaining);

// Throws IllegalMove when the heap index is out of range, take is 0, or take
// exceeds the heap.
Heaps apply_move(const Heaps& heaps, const NimMove& move);

bool is_terminal(const Heaps& heaps) noexcept;
bool is_terminal(const SubtractionGame& game, std::uint64_t remaining) noexcept;

// Deterministic engine policy: the first optimal move when winning, else the
// lowest-index legal move taking one object. Empty when the position is over.
std::optional<NimMove> engine_move(const Heaps& heaps);
// Same policy for a subtraction game; the returned take is the move size.
std::optional<std::uint64_t> engine_move(const SubtractionGame& game, std::uint64_t remaining);

}  // namespace mathplay::games
