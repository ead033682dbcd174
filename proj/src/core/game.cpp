#include "game.hpp"

#include <bit>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace tgame {

std::string_view role_name(PlayerRole r) {
  return r == PlayerRole::EdgeHitter ? "EdgeHitter" : "Staller";
}

GameState::GameState(std::shared_ptr<const Hypergraph> h, PlayerRole first, EdgeMask precovered)
    : graph_(std::move(h)), first_(first), to_move_(first) {
  if (!graph_) throw Error(ErrorCode::InvalidArgument, "null hypergraph");
  if (!graph_->fits_mask()) {
    throw Error(ErrorCode::LimitExceeded,
                "game positions support at most " + std::to_string(kMaxMaskEdges) + " edges, got " +
                    std::to_string(graph_->size()));
  }
  if ((precovered & ~graph_->all_edges()) != 0) {
    throw Error(ErrorCode::IndexOutOfRange, "pre-covered set names a nonexistent edge");
  }
  covered_ = precovered;
  initial_covered_ = precovered;
}

bool GameState::is_legal(VertexId v) const {
  return v >= 0 && v < graph_->order() && hits(v) != 0;
}

GameState GameState::apply(VertexId v) const {
  if (v < 0 || v >= graph_->order()) {
    throw Error(ErrorCode::IllegalMove, "vertex " + std::to_string(v) + " does not exist");
  }
  const EdgeMask fresh = hits(v);
  if (fresh == 0) {
    throw Error(ErrorCode::IllegalMove,
                "vertex " + std::to_string(v) + " hits no uncovered edge");
  }
  GameState next = *this;
  next.covered_ |= fresh;
  next.history_.push_back({v, to_move_, fresh});
  next.to_move_ = opponent(to_move_);
  return next;
}

std::vector<VertexId> legal_moves(const GameState& s) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < s.hypergraph().order(); ++v) {
    if (s.hits(v) != 0) out.push_back(v);
  }
  return out;
}

GameState apply_move(const GameState& s, VertexId v) { return s.apply(v); }

std::vector<EdgeId> edges_of(EdgeMask mask) {
  std::vector<EdgeId> out;
  while (mask != 0) {
    out.push_back(static_cast<EdgeId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

Transcript transcript_of(const GameState& s) {
  Transcript t;
  t.order = s.hypergraph().order();
  t.size = s.hypergraph().size();
  t.first = s.first_player();
  t.initial_covered = edges_of(s.initial_covered());
  int index = 0;
  for (const MoveRecord& m : s.history()) {
    TranscriptMove tm;
    tm.index = index++;
    tm.player = m.player;
    tm.vertex = m.vertex;
    tm.newly_covered = edges_of(m.newly_covered);
    t.moves.push_back(std::move(tm));
  }
  t.final_covered = edges_of(s.covered());
  t.complete = s.is_terminal();
  return t;
}

std::string Transcript::to_jsonl() const {
  using nlohmann::json;
  std::ostringstream out;
  json header = {{"type", "header"},
                 {"n", order},
                 {"m", size},
                 {"first", role_name(first)},
                 {"initial_covered", initial_covered}};
  if (scheme) header["scheme"] = *scheme;
  if (initial_weight) header["initial_weight"] = *initial_weight;
  out << header.dump() << '\n';
  for (const TranscriptMove& m : moves) {
    json line = {{"type", "move"},
                 {"move", m.index},
                 {"player", role_name(m.player)},
                 {"vertex", m.vertex},
                 {"newly_covered", m.newly_covered}};
    if (m.weight_decrease) line["weight_decrease"] = *m.weight_decrease;
    if (!m.rule.empty()) line["rule"] = m.rule;
    if (m.flagged) line["flagged"] = true;
    out << line.dump() << '\n';
  }
  json summary = {{"type", "summary"},
                  {"length", length()},
                  {"complete", complete},
                  {"final_covered", final_covered}};
  if (final_weight) summary["final_weight"] = *final_weight;
  out << summary.dump() << '\n';
  return out.str();
}

}  // namespace tgame
