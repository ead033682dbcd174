#pragma once

// Slow, independent reference implementations used only by the tests. None
// of them reuse the library's search code; they work directly on edge lists.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::vector<int>>;

inline bool hits_all(const EdgeList& edges, std::uint32_t chosen) {
  for (const auto& e : edges) {
    bool hit = false;
    for (int v : e) hit = hit || ((chosen >> v) & 1U);
    if (!hit) return false;
  }
  return true;
}

// Smallest vertex subset meeting every edge, by trying all 2^n subsets.
inline int transversal_number(int n, const EdgeList& edges) {
  int best = n + 1;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size < best && hits_all(edges, s)) best = size;
  }
  return best;
}

// Game value computed over the set of vertices played so far. A vertex is
// legal when some edge containing it contains no played vertex. The state
// is the played set itself, so this never relies on covered-edge
// bookkeeping. `precovered` marks edges treated as already hit.
inline int game_value(int n, const EdgeList& edges, bool edge_hitter_first,
                      std::uint64_t precovered = 0) {
  std::map<std::uint32_t, int> memo;
  std::function<int(std::uint32_t, bool)> rec = [&](std::uint32_t played, bool eh) -> int {
    if (auto it = memo.find(played); it != memo.end()) return it->second;
    bool any = false;
    int best = eh ? 1 << 20 : -1;
    for (int v = 0; v < n; ++v) {
      if ((played >> v) & 1U) continue;
      bool legal = false;
      for (std::size_t e = 0; e < edges.size() && !legal; ++e) {
        if ((precovered >> e) & 1U) continue;
        const auto& edge = edges[e];
        if (std::find(edge.begin(), edge.end(), v) == edge.end()) continue;
        bool open = true;
        for (int w : edge) open = open && !((played >> w) & 1U);
        legal = open;
      }
      if (!legal) continue;
      any = true;
      const int value = 1 + rec(played | (1U << v), !eh);
      best = eh ? std::min(best, value) : std::max(best, value);
    }
    const int out = any ? best : 0;
    memo[played] = out;
    return out;
  };
  // Turn parity follows from the number of played vertices, so the played
  // set alone identifies the position.
  return rec(0, edge_hitter_first);
}

// Table weights recomputed from a degree census of the uncovered edges.
inline long long weight3(int n, const EdgeList& edges, std::uint64_t covered) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  long long total = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if ((covered >> e) & 1U) continue;
    total += 15;
    for (int v : edges[e]) ++deg[static_cast<std::size_t>(v)];
  }
  for (int d : deg) total += d >= 3 ? 15 : d == 2 ? 14 : d == 1 ? 11 : 0;
  return total;
}

}  // namespace oracle
