#pragma once

// Test-only reference implementations. Deliberately naive: they share no
// code with the library and favour obviousness over speed.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// ---- games ----

// Exhaustive game tree for Nim, memoized on sorted heap tuples. True when the
// player to move wins under normal play.
class NimTree {
 public:
  bool mover_wins(std::vector<std::uint64_t> heaps) {
    std::sort(heaps.begin(), heaps.end());
    if (auto it = memo_.find(heaps); it != memo_.end()) return it->second;
    bool wins = false;
    for (std::size_t i = 0; i < heaps.size() && !wins; ++i) {
      for (std::uint64_t take = 1; take <= heaps[i] && !wins; ++take) {
        auto next = heaps;
        next[i] -= take;
        if (!mover_wins(next)) wins = true;
      }
    }
    memo_[heaps] = wins;
    return wins;
  }

 private:
  std::map<std::vector<std::uint64_t>, bool> memo_;
};

// Retrograde win/loss table for a subtraction game.
inline std::vector<bool> subtraction_wins(std::uint64_t target, const std::vector<std::uint64_t>& moves) {
  std::vector<bool> win(target + 1, false);
  for (std::uint64_t n = 1; n <= target; ++n) {
    for (auto s : moves) {
      if (s <= n && !win[n - s]) win[n] = true;
    }
  }
  return win;
}

// ---- graphs ----

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

// Counts walks by stepping along edges; a loop is one step from v to v.
inline std::uint64_t enumerate_walks(std::size_t from, std::size_t to, std::uint64_t length, const Edges& edges) {
  if (length == 0) return from == to ? 1 : 0;
  std::uint64_t total = 0;
  for (const auto& [a, b] : edges) {
    if (a == from) total += enumerate_walks(b, to, length - 1, edges);
    else if (b == from) total += enumerate_walks(a, to, length - 1, edges);
  }
  return total;
}

// Hierholzer's algorithm from `start`. Returns the vertex sequence of a trail
// using every edge once, or an empty vector if the walk gets stuck.
inline std::vector<std::size_t> euler_trail(std::size_t n, const Edges& edges, std::size_t start) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, edge id)
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].push_back({edges[e].second, e});
    if (edges[e].first != edges[e].second) adj[edges[e].second].push_back({edges[e].first, e});
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> next(n, 0);
  std::vector<std::size_t> stack{start};
  std::vector<std::size_t> trail;
  while (!stack.empty()) {
    const auto v = stack.back();
    while (next[v] < adj[v].size() && used[adj[v][next[v]].second]) ++next[v];
    if (next[v] == adj[v].size()) {
      trail.push_back(v);
      stack.pop_back();
    } else {
      const auto [w, e] = adj[v][next[v]];
      used[e] = true;
      stack.push_back(w);
    }
  }
  std::reverse(trail.begin(), trail.end());
  return trail;
}

// True when consecutive trail vertices consume every edge exactly once.
inline bool trail_covers(const std::vector<std::size_t>& trail, const Edges& edges) {
  if (trail.size() != edges.size() + 1) return false;
  std::multiset<std::pair<std::size_t, std::size_t>> remaining;
  for (auto [a, b] : edges) remaining.insert({std::min(a, b), std::max(a, b)});
  for (std::size_t i = 0; i + 1 < trail.size(); ++i) {
    const auto key = std::make_pair(std::min(trail[i], trail[i + 1]), std::max(trail[i], trail[i + 1]));
    const auto it = remaining.find(key);
    if (it == remaining.end()) return false;
    remaining.erase(it);
  }
  return remaining.empty();
}

// ---- puzzles ----

inline std::uint64_t enumerate_subsquares(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t size = 1; size <= n; ++size) {
    for (std::uint64_t x = 0; x + size <= n; ++x) {
      for (std::uint64_t y = 0; y + size <= n; ++y) ++count;
    }
  }
  return count;
}

inline std::uint64_t enumerate_rooks(int n, int row = 0, unsigned used = 0) {
  if (row == n) return 1;
  std::uint64_t total = 0;
  for (int c = 0; c < n; ++c) {
    if (!(used & (1u << c))) total += enumerate_rooks(n, row + 1, used | (1u << c));
  }
  return total;
}

// Counts triangles in an n-row triangulated triangle by testing every triple
// of lattice vertices. Vertex (r, i) with 0 <= i <= r <= n lies on three grid
// lines: row r, "left" line i and "right" line r - i. Three vertices pairwise
// sharing a grid line, not all on one line, bound a drawn triangle.
inline std::uint64_t enumerate_triangles(int n) {
  std::vector<std::array<int, 3>> v;
  for (int r = 0; r <= n; ++r) {
    for (int i = 0; i <= r; ++i) v.push_back({r, i, r - i});
  }
  auto shared = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int k = 0; k < 3; ++k) {
      if (a[k] == b[k]) return k;
    }
    return -1;
  };
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      const int ab = shared(v[a], v[b]);
      if (ab < 0) continue;
      for (std::size_t c = b + 1; c < v.size(); ++c) {
        const int bc = shared(v[b], v[c]);
        const int ca = shared(v[c], v[a]);
        if (bc < 0 || ca < 0) continue;
        if (ab == bc && bc == ca) continue;  // collinear
        ++count;
      }
    }
  }
  return count;
}

// Plain backtracking domino search, no pruning or memo.
inline bool dominoes_fit(std::vector<std::vector<bool>>& open, int w, int h) {
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!open[r][c]) continue;
      open[r][c] = false;
      if (c + 1 < w && open[r][c + 1]) {
        open[r][c + 1] = false;
        if (dominoes_fit(open, w, h)) return true;
        open[r][c + 1] = true;
      }
      if (r + 1 < h && open[r + 1][c]) {
        open[r + 1][c] = false;
        if (dominoes_fit(open, w, h)) return true;
        open[r + 1][c] = true;
      }
      open[r][c] = true;
      return false;
    }
  }
  return true;
}

// All 288 valid 4x4 Sudoku grids, by filtering every row-permutation choice.
inline const std::vector<std::array<std::uint8_t, 16>>& all_sudoku4() {
  static const auto grids = [] {
    std::vector<std::array<std::uint8_t, 4>> perms;
    std::array<std::uint8_t, 4> p{1, 2, 3, 4};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::array<std::uint8_t, 16>> out;
    for (const auto& a : perms)
      for (const auto& b : perms)
        for (const auto& c : perms)
          for (const auto& d : perms) {
            std::array<std::uint8_t, 16> g{};
            const std::array<const std::array<std::uint8_t, 4>*, 4> rows{&a, &b, &c, &d};
            for (int r = 0; r < 4; ++r)
              for (int col = 0; col < 4; ++col) g[r * 4 + col] = (*rows[r])[col];
            bool ok = true;
            for (int col = 0; col < 4 && ok; ++col) {
              std::set<int> seen;
              for (int r = 0; r < 4; ++r) seen.insert(g[r * 4 + col]);
              ok = seen.size() == 4;
            }
            for (int box = 0; box < 4 && ok; ++box) {
              std::set<int> seen;
              const int r0 = (box / 2) * 2;
              const int c0 = (box % 2) * 2;
              for (int dr = 0; dr < 2; ++dr)
                for (int dc = 0; dc < 2; ++dc) seen.insert(g[(r0 + dr) * 4 + c0 + dc]);
              ok = seen.size() == 4;
            }
            if (ok) out.push_back(g);
          }
    return out;
  }();
  return grids;
}

inline bool sudoku4_valid_completion(const std::array<std::uint8_t, 16>& givens,
                                     const std::array<std::uint8_t, 16>& grid) {
  for (int i = 0; i < 16; ++i) {
    if (grid[i] < 1 || grid[i] > 4) return false;
    if (givens[i] != 0 && givens[i] != grid[i]) return false;
  }
  const auto& all = all_sudoku4();
  return std::find(all.begin(), all.end(), grid) != all.end();
}

// Ants pass through each other in effect, so the clear time is the longest
// solo walk to the end each ant is facing.
inline double ants_pass_through(double length, double speed, const std::vector<std::pair<double, int>>& ants) {
  double worst = 0.0;
  for (const auto& [pos, dir] : ants) worst = std::max(worst, (dir > 0 ? length - pos : pos) / speed);
  return worst;
}

}  // namespace oracle
