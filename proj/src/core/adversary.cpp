#include <chrono>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"
#include "solver.hpp"
#include "strategies.hpp"

namespace tgame {

namespace {

// Game search where one side is a fixed policy and the other side plays
// exhaustively. A position is (uncovered, to_move) plus the policy's own
// context, since a policy with memory may answer the same position
// differently.
class AdversarySearch {
 public:
  AdversarySearch(std::shared_ptr<const Hypergraph> h, PlayerRole fixed_role, const SolveLimits& limits)
      : graph_(std::move(h)), fixed_(fixed_role), limits_(limits),
        started_(std::chrono::steady_clock::now()) {
    if (graph_->size() > limits_.max_edges) {
      throw Error(ErrorCode::LimitExceeded,
                  std::to_string(graph_->size()) + " edges exceed the limit of " +
                      std::to_string(limits_.max_edges));
    }
  }

  int solve(EdgeMask uncovered, PlayerRole to_move, const Strategy& policy) {
    if (uncovered == 0) return 0;
    count_node();
    const std::string k = key(uncovered, to_move, policy);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second.value;

    const GameState s = position(uncovered, to_move);
    Entry entry;
    if (to_move == fixed_) {
      std::unique_ptr<Strategy> next = policy.clone();
      const Decision d = next->choose(s);
      if (!s.is_legal(d.vertex)) {
        throw Error(ErrorCode::IllegalMove,
                    policy.name() + " chose illegal vertex " + std::to_string(d.vertex));
      }
      entry.move = d.vertex;
      entry.value = 1 + solve(uncovered & ~s.hits(d.vertex), opponent(to_move), *next);
    } else {
      const bool maximize = to_move == PlayerRole::Staller;
      std::unordered_set<EdgeMask> seen;
      for (VertexId v = 0; v < graph_->order(); ++v) {
        const EdgeMask hit = s.hits(v);
        if (hit == 0 || !seen.insert(hit).second) continue;
        const int value = 1 + solve(uncovered & ~hit, opponent(to_move), policy);
        if (entry.move < 0 || (maximize ? value > entry.value : value < entry.value)) {
          entry.move = v;
          entry.value = value;
        }
      }
    }
    memo_.emplace(k, entry);
    return entry.value;
  }

  // Replays the optimal line from the root into a transcript.
  Transcript witness(const GameState& start, const Strategy& policy) {
    GameState s = start;
    std::unique_ptr<Strategy> current = policy.clone();
    Transcript t = transcript_of(start);
    while (!s.is_terminal()) {
      TranscriptMove tm;
      tm.index = s.length();
      tm.player = s.to_move();
      if (s.to_move() == fixed_) {
        const Decision d = current->choose(s);
        tm.vertex = d.vertex;
        tm.rule = d.rule;
        tm.flagged = d.flagged;
      } else {
        tm.vertex = memo_.at(key(s.uncovered(), s.to_move(), *current)).move;
        tm.rule = "adversary";
      }
      s = s.apply(tm.vertex);
      tm.newly_covered = edges_of(s.history().back().newly_covered);
      t.moves.push_back(std::move(tm));
    }
    t.final_covered = edges_of(s.covered());
    t.complete = true;
    return t;
  }

 private:
  struct Entry {
    int value = 0;
    VertexId move = -1;
  };

  GameState position(EdgeMask uncovered, PlayerRole to_move) const {
    return GameState(graph_, to_move, graph_->all_edges() & ~uncovered);
  }

  static std::string key(EdgeMask uncovered, PlayerRole to_move, const Strategy& policy) {
    std::string k(reinterpret_cast<const char*>(&uncovered), sizeof uncovered);
    k.push_back(static_cast<char>(to_move));
    k += policy.context_key();
    return k;
  }

  void count_node() {
    ++nodes_;
    if (limits_.max_nodes != 0 && nodes_ > limits_.max_nodes) {
      throw Error(ErrorCode::LimitExceeded,
                  "node budget of " + std::to_string(limits_.max_nodes) + " exhausted");
    }
    if (limits_.time_budget.count() > 0 && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() - started_ > limits_.time_budget) {
      throw Error(ErrorCode::LimitExceeded,
                  "time budget of " + std::to_string(limits_.time_budget.count()) + " ms exhausted");
    }
  }

  std::shared_ptr<const Hypergraph> graph_;
  PlayerRole fixed_;
  SolveLimits limits_;
  std::chrono::steady_clock::time_point started_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, Entry> memo_;
};

}  // namespace

StrategyEvaluation evaluate_strategy(const GameState& start, const Strategy& strategy,
                                     PlayerRole fixed_role, const SolveLimits& limits) {
  AdversarySearch search(start.shared_hypergraph(), fixed_role, limits);
  StrategyEvaluation out;
  out.length = search.solve(start.uncovered(), start.to_move(), strategy);
  out.witness = search.witness(start, strategy);
  return out;
}

StrategyEvaluation worst_case_vs_strategy(std::shared_ptr<const Hypergraph> h, const Strategy& eh,
                                          PlayerRole first, const SolveLimits& limits) {
  return evaluate_strategy(GameState(std::move(h), first), eh, PlayerRole::EdgeHitter, limits);
}

}  // namespace tgame
