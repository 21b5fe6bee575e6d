#include "mathplay/games.hpp"

#include <string>

#include "mathplay/error.hpp"

namespace mathplay::games {

namespace {

std::uint64_t mex(const std::vector<bool>& seen) {
  std::uint64_t value = 0;
  while (value < seen.size() && seen[value]) ++value;
  return value;
}

}  // namespace

SubtractionGame::SubtractionGame(std::uint64_t target, std::set<std::uint64_t> moves)
    : target_(target), moves_(std::move(moves)) {
  if (moves_.empty()) throw Error(ErrorCode::InvalidArgument, "move set must not be empty");
  if (*moves_.begin() == 0) throw Error(ErrorCode::InvalidArgument, "move sizes must be positive");
}

std::uint64_t nim_sum(const Heaps& heaps) noexcept {
  std::uint64_t sum = 0;
  for (auto count : heaps) sum ^= count;
  return sum;
}

GameAnalysis analyze_nim(const Heaps& heaps) {
  GameAnalysis result;
  result.grundy = nim_sum(heaps);
  result.outcome = result.grundy != 0 ? Outcome::First : Outcome::Second;
  if (result.grundy == 0) return result;
  // At most one take per heap zeroes the nim-sum: reduce heap i to h_i ^ s.
  for (std::size_t i = 0; i < heaps.size(); ++i) {
    const std::uint64_t reduced = heaps[i] ^ result.grundy;
    if (reduced < heaps[i]) result.optimal_moves.push_back({i, heaps[i] - reduced});
  }
  return result;
}

std::vector<std::uint64_t> grundy_table(const SubtractionGame& game) {
  if (game.target() > kMaxSubtractionTarget) {
    throw Error(ErrorCode::InvalidArgument, "target exceeds " + std::to_string(kMaxSubtractionTarget));
  }
  std::vector<std::uint64_t> table(game.target() + 1, 0);
  std::vector<bool> seen;
  for (std::uint64_t n = 1; n <= game.target(); ++n) {
    seen.assign(game.moves().size() + 1, false);
    for (auto s : game.moves()) {
      if (s > n) break;
      const auto g = table[n - s];
      if (g < seen.size()) seen[g] = true;
    }
    table[n] = mex(seen);
  }
  return table;
}

std::uint64_t grundy_subtraction(const SubtractionGame& game, std::uint64_t pile) {
  if (pile > game.target()) {
    throw Error(ErrorCode::InvalidArgument,
                "pile " + std::to_string(pile) + " exceeds target " + std::to_string(game.target()));
  }
  return grundy_table(game)[pile];
}

GameAnalysis analyze_subtraction(const SubtractionGame& game) {
  return analyze_subtraction(game, game.target());
}

GameAnalysis analyze_subtraction(const SubtractionGame& game, std::uint64_t remaining) {
  if (remaining > game.target()) {
    throw Error(ErrorCode::InvalidArgument, "remaining pile exceeds target");
  }
  const auto table = grundy_table(game);
  GameAnalysis result;
  result.grundy = table[remaining];
  result.outcome = result.grundy != 0 ? Outcome::First : Outcome::Second;
  for (auto s : game.moves()) {
    if (s > remaining) break;
    if (table[remaining - s] == 0) result.optimal_moves.push_back({0, s});
  }
  return result;
}

Heaps apply_move(const Heaps& heaps, const NimMove& move) {
  if (move.heap_index >= heaps.size()) {
    throw Error(ErrorCode::IllegalMove, "heap index " + std::to_string(move.heap_index) + " out of range");
  }
  if (move.take == 0) throw Error(ErrorCode::IllegalMove, "must take at least one object");
  if (move.take > heaps[move.heap_index]) {
    throw Error(ErrorCode::IllegalMove, "cannot take " + std::to_string(move.take) + " from a heap of " +
                                            std::to_string(heaps[move.heap_index]));
  }
  Heaps next = heaps;
  next[move.heap_index] -= move.take;
  return next;
}

bool is_terminal(const Heaps& heaps) noexcept {
  for (auto count : heaps) {
    if (count != 0) return false;
  }
  return true;
}

bool is_terminal(const SubtractionGame& game, std::uint64_t remaining) noexcept {
  return remaining < *game.moves().begin();
}

std::optional<NimMove> engine_move(const Heaps& heaps) {
  const auto analysis = analyze_nim(heaps);
  if (!analysis.optimal_moves.empty()) return analysis.optimal_moves.front();
  for (std::size_t i = 0; i < heaps.size(); ++i) {
    if (heaps[i] > 0) return NimMove{i, 1};
  }
  return std::nullopt;
}

std::optional<std::uint64_t> engine_move(const SubtractionGame& game, std::uint64_t remaining) {
  const auto analysis = analyze_subtraction(game, remaining);
  if (!analysis.optimal_moves.empty()) return analysis.optimal_moves.front().take;
  if (is_terminal(game, remaining)) return std::nullopt;
  return *game.moves().begin();
}

}  // namespace mathplay::games
