#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "game.hpp"
#include "solver.hpp"

namespace tgame {

struct PlayOptions {
  PlayerRole human = PlayerRole::EdgeHitter;
  PlayerRole first = PlayerRole::EdgeHitter;
  // exact, eh3, eh4, greedy or random:SEED.
  std::string engine = "exact";
  SolveLimits limits;
};

struct PlayOutcome {
  Transcript transcript;
  // Input ended before the game did.
  bool aborted = false;
  // Optimal length from the start position, when the solver could get it.
  std::optional<int> optimal;
};

// Returns the next input line, or nullopt at end of input.
using LineReader = std::function<std::optional<std::string>()>;
using TextWriter = std::function<void(std::string_view)>;

// Terminal game between a human and an engine. Every prompt lists the
// uncovered edges, residual degrees (with colors when the hypergraph is 3-
// or 4-uniform), the legal moves and the current weight. Illegal input is
// rejected with the reason and asked again. At end of input the partial
// transcript is returned with aborted set.
PlayOutcome play_session(std::shared_ptr<const Hypergraph> h, const PlayOptions& options,
                         const LineReader& read, const TextWriter& write);

}  // namespace tgame
