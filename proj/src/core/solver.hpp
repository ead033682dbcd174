#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "game.hpp"
#include "hypergraph.hpp"

namespace tgame {

class Strategy;

struct SolveLimits {
  // Largest edge count accepted for an exact game solve.
  int max_edges = 24;
  // 0 means unlimited.
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds time_budget{0};
};

struct SolverOptions {
  // Skip moves whose uncovered incidence set is strictly contained in
  // (Edge-hitter) or strictly contains (Staller) another move's.
  bool prune_dominated = true;
  // Worker threads for the root fan-out; 1 solves on the calling thread.
  int threads = 1;
};

// Maps (uncovered edge set, player to move) to the optimal number of
// remaining moves. A flat array indexed by the key is used up to
// kFlatMemoEdges edges, a sharded hash map beyond. Concurrent get/put is
// safe; racing writers store the same value.
class MemoTable {
 public:
  static constexpr int kFlatMemoEdges = 26;

  explicit MemoTable(int edge_count);

  std::optional<int> get(EdgeMask uncovered, PlayerRole to_move) const;
  void put(EdgeMask uncovered, PlayerRole to_move, int value);
  std::size_t entries() const { return entries_.load(std::memory_order_relaxed); }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex lock;
    std::unordered_map<EdgeMask, std::uint8_t> values[2];
  };

  bool flat_ = true;
  std::unique_ptr<std::atomic<std::uint8_t>[]> slots_;
  std::unique_ptr<Shard[]> shards_;
  std::atomic<std::size_t> entries_{0};
};

// Exact minimax solver for the transversal game on one hypergraph. Values of
// all positions reached are memoized, so repeated queries on the same
// instance are cheap.
class GameSolver {
 public:
  // Throws LimitExceeded if the hypergraph has more than limits.max_edges
  // edges.
  explicit GameSolver(std::shared_ptr<const Hypergraph> h, SolveLimits limits = {},
                      SolverOptions options = {});

  const Hypergraph& hypergraph() const { return *graph_; }

  // Optimal number of moves still to be played.
  int value(EdgeMask uncovered, PlayerRole to_move);
  int value(const GameState& s) { return value(s.uncovered(), s.to_move()); }

  // Lowest-id legal vertex attaining value(s). Throws IllegalMove on a
  // terminal position.
  VertexId best_move(const GameState& s);

  std::size_t memo_entries() const { return memo_.entries(); }
  std::uint64_t nodes_expanded() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  struct Scratch {
    std::vector<std::vector<EdgeMask>> by_depth;
  };

  int search(EdgeMask uncovered, bool edge_hitter, int depth, Scratch& scratch);
  void candidate_moves(EdgeMask uncovered, bool edge_hitter, std::vector<EdgeMask>& out) const;
  void count_node();
  int parallel_root(EdgeMask uncovered, bool edge_hitter);

  std::shared_ptr<const Hypergraph> graph_;
  SolveLimits limits_;
  SolverOptions options_;
  std::vector<EdgeMask> incidence_;
  MemoTable memo_;
  std::atomic<std::uint64_t> nodes_{0};
  std::chrono::steady_clock::time_point started_;
};

// Minimum transversal size, by branch and bound over the vertices of a
// smallest uncovered edge. Independent of the game search.
int transversal_number(const Hypergraph& h, const SolveLimits& limits = {});

int game_value(const GameState& s, const SolveLimits& limits = {}, const SolverOptions& options = {});
VertexId best_move(const GameState& s, const SolveLimits& limits = {},
                   const SolverOptions& options = {});

struct GameNumbers {
  int tau = 0;
  int tau_g = 0;
  int tau_g_prime = 0;
  std::size_t memo_entries = 0;
};

// tau, tau_g and tau_g' of a hypergraph, sharing one memo table.
GameNumbers solve_numbers(std::shared_ptr<const Hypergraph> h, const SolveLimits& limits = {},
                          const SolverOptions& options = {});

struct StrategyEvaluation {
  int length = 0;
  Transcript witness;
};

// Plays `strategy` for `fixed_role` while the other player searches
// exhaustively: a searching Staller maximizes the game length, a searching
// Edge-hitter minimizes it. Returns the resulting optimal length and one
// line of play attaining it.
StrategyEvaluation evaluate_strategy(const GameState& start, const Strategy& strategy,
                                     PlayerRole fixed_role, const SolveLimits& limits = {});

// Edge-hitter fixed to `eh`, Staller an exact maximizing adversary.
StrategyEvaluation worst_case_vs_strategy(std::shared_ptr<const Hypergraph> h, const Strategy& eh,
                                          PlayerRole first, const SolveLimits& limits = {});

}  // namespace tgame
