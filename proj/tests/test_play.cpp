#include <doctest.h>

#include <deque>

#include "constructions.hpp"
#include "error.hpp"
#include "play.hpp"
#include "solver.hpp"
#include "support.hpp"

using namespace tgame;
using testing_support::share;

namespace {

struct Script {
  std::deque<std::string> lines;
  std::string output;

  LineReader reader() {
    return [this]() -> std::optional<std::string> {
      if (lines.empty()) return std::nullopt;
      std::string l = lines.front();
      lines.pop_front();
      return l;
    };
  }
  TextWriter writer() {
    return [this](std::string_view s) { output.append(s); };
  }
};

// A human who tracks the game from the engine's announcements and answers
// with an optimal move.
struct OptimalHuman {
  std::shared_ptr<const Hypergraph> h;
  GameState state;
  GameSolver solver;
  std::string output;
  std::size_t scanned = 0;

  OptimalHuman(std::shared_ptr<const Hypergraph> graph, PlayerRole first)
      : h(graph), state(graph, first), solver(graph) {}

  void catch_up() {
    const std::string tag = "engine plays ";
    for (std::size_t at; (at = output.find(tag, scanned)) != std::string::npos;) {
      scanned = at + tag.size();
      state = state.apply(std::stoi(output.substr(scanned)));
    }
  }

  std::optional<std::string> next() {
    catch_up();
    if (state.is_terminal()) return std::nullopt;
    VertexId best = -1;
    int best_value = 0;
    const bool maximize = state.to_move() == PlayerRole::Staller;
    for (VertexId v : legal_moves(state)) {
      const int value = solver.value(state.apply(v));
      if (best < 0 || (maximize ? value > best_value : value < best_value)) {
        best = v;
        best_value = value;
      }
    }
    state = state.apply(best);
    return std::to_string(best);
  }
};

}  // namespace

TEST_CASE("illegal input is rejected and asked again") {
  Script script;
  script.lines = {"x", "9", "", "0", "1", "2", "3"};
  const PlayOutcome out = play_session(share(cycle4()), {.engine = "greedy"}, script.reader(), script.writer());
  CHECK(script.output.find("illegal: not a vertex id") != std::string::npos);
  CHECK(script.output.find("illegal: no such vertex") != std::string::npos);
  CHECK(script.output.find("legal: 0 1 2 3") != std::string::npos);
  CHECK_FALSE(out.aborted);
  CHECK(out.transcript.complete);
  CHECK(out.transcript.moves.front().vertex == 0);
}

TEST_CASE("replaying a covered vertex is illegal") {
  Script script;
  script.lines = {"0", "0"};
  (void)play_session(share(testing_support::h1()), {.engine = "exact"}, script.reader(), script.writer());
  CHECK(script.output.find("illegal: hits no uncovered edge") != std::string::npos);
}

TEST_CASE("end of input aborts the game") {
  Script script;
  script.lines = {"0"};
  const PlayOutcome out = play_session(share(testing_support::h1()), {.engine = "exact"}, script.reader(),
                                       script.writer());
  CHECK(out.aborted);
  CHECK_FALSE(out.transcript.complete);
  CHECK(out.transcript.length() >= 1);
  CHECK(script.output.find("game aborted") != std::string::npos);
}

TEST_CASE("prompts show colors and weight on 3-uniform input") {
  Script script;
  script.lines = {"0"};
  (void)play_session(share(figure2()), {.engine = "exact"}, script.reader(), script.writer());
  CHECK(script.output.find("0:2(green)") != std::string::npos);
  CHECK(script.output.find("weight: 144") != std::string::npos);
}

TEST_CASE("an optimal human Staller against the exact engine on figure2") {
  const auto h = share(figure2());
  OptimalHuman human(h, PlayerRole::EdgeHitter);
  const PlayOutcome out = play_session(h, {.human = PlayerRole::Staller, .engine = "exact"},
                                       [&] { return human.next(); },
                                       [&](std::string_view s) { human.output.append(s); });
  CHECK(out.transcript.length() == 3);
  CHECK(out.optimal == 3);
  CHECK(human.output.find("(optimal length)") != std::string::npos);
}

TEST_CASE("an optimal human Edge-hitter on H1") {
  const auto h = share(testing_support::h1());
  OptimalHuman human(h, PlayerRole::EdgeHitter);
  const PlayOutcome out = play_session(h, {.human = PlayerRole::EdgeHitter, .engine = "exact"},
                                       [&] { return human.next(); },
                                       [&](std::string_view s) { human.output.append(s); });
  CHECK(out.transcript.length() == 4);
  CHECK(out.optimal == 4);
}

TEST_CASE("eh3 cannot be the Staller engine") {
  Script script;
  CHECK_THROWS_AS(play_session(share(figure2()), {.human = PlayerRole::EdgeHitter, .engine = "eh3"},
                               script.reader(), script.writer()),
                  Error);
}
