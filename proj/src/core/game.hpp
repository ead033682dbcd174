#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypergraph.hpp"

namespace tgame {

enum class PlayerRole : std::uint8_t { EdgeHitter = 0, Staller = 1 };

constexpr PlayerRole opponent(PlayerRole r) {
  return r == PlayerRole::EdgeHitter ? PlayerRole::Staller : PlayerRole::EdgeHitter;
}
std::string_view role_name(PlayerRole r);

struct MoveRecord {
  VertexId vertex = 0;
  PlayerRole player = PlayerRole::EdgeHitter;
  EdgeMask newly_covered = 0;
};

// Immutable position of the transversal game. The position proper is the set
// of uncovered edges plus the player to move; the history is carried along
// for transcripts only.
class GameState {
 public:
  // `precovered` declares edges already covered (a partially covered
  // hypergraph). Throws LimitExceeded when the hypergraph has more edges
  // than an EdgeMask holds.
  GameState(std::shared_ptr<const Hypergraph> h, PlayerRole first, EdgeMask precovered = 0);

  const Hypergraph& hypergraph() const { return *graph_; }
  const std::shared_ptr<const Hypergraph>& shared_hypergraph() const { return graph_; }

  EdgeMask covered() const { return covered_; }
  EdgeMask uncovered() const { return graph_->all_edges() & ~covered_; }
  EdgeMask initial_covered() const { return initial_covered_; }
  PlayerRole first_player() const { return first_; }
  PlayerRole to_move() const { return to_move_; }
  const std::vector<MoveRecord>& history() const { return history_; }
  int length() const { return static_cast<int>(history_.size()); }
  bool is_terminal() const { return uncovered() == 0; }

  // Uncovered edges that v would cover.
  EdgeMask hits(VertexId v) const { return graph_->incidence_mask(v) & uncovered(); }
  bool is_legal(VertexId v) const;

  ResidualView residual() const { return ResidualView(*graph_, covered_); }

  // Returns the successor; throws IllegalMove when v hits no uncovered edge.
  GameState apply(VertexId v) const;

 private:
  std::shared_ptr<const Hypergraph> graph_;
  EdgeMask covered_ = 0;
  EdgeMask initial_covered_ = 0;
  PlayerRole first_ = PlayerRole::EdgeHitter;
  PlayerRole to_move_ = PlayerRole::EdgeHitter;
  std::vector<MoveRecord> history_;
};

// Ascending; empty iff the game is over.
std::vector<VertexId> legal_moves(const GameState& s);
GameState apply_move(const GameState& s, VertexId v);

std::vector<EdgeId> edges_of(EdgeMask mask);

struct TranscriptMove {
  int index = 0;
  PlayerRole player = PlayerRole::EdgeHitter;
  VertexId vertex = 0;
  std::vector<EdgeId> newly_covered;
  std::optional<long long> weight_decrease;
  // Which rule of the strategy produced the move, when known.
  std::string rule;
  bool flagged = false;
};

struct Transcript {
  int order = 0;
  int size = 0;
  PlayerRole first = PlayerRole::EdgeHitter;
  std::vector<EdgeId> initial_covered;
  std::vector<TranscriptMove> moves;
  std::vector<EdgeId> final_covered;
  bool complete = false;
  std::optional<int> scheme;
  std::optional<long long> initial_weight;
  std::optional<long long> final_weight;

  int length() const { return static_cast<int>(moves.size()); }

  // One JSON object per line: a header, one line per move, a summary.
  std::string to_jsonl() const;
};

// Builds the transcript skeleton of a played-out state (no rule tags or
// weights).
Transcript transcript_of(const GameState& s);

}  // namespace tgame
