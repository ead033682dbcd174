#include <doctest.h>

#include <json.hpp>

#include "constructions.hpp"
#include "error.hpp"
#include "game.hpp"
#include "generators.hpp"
#include "solver.hpp"
#include "support.hpp"

using namespace tgame;
using testing_support::share;

TEST_CASE("every vertex of a fresh C4 is legal") {
  const GameState s(share(cycle4()), PlayerRole::EdgeHitter);
  CHECK(legal_moves(s) == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("only the last edge's vertices are legal") {
  // Edges: 0={0,1} 1={1,2} 2={2,3} 3={0,3}.
  const GameState s(share(cycle4()), PlayerRole::EdgeHitter, edge_bit(0) | edge_bit(1) | edge_bit(2));
  CHECK(legal_moves(s) == std::vector<VertexId>{0, 3});
}

TEST_CASE("a terminal state has no legal moves") {
  const auto c4 = share(cycle4());
  const GameState s(c4, PlayerRole::EdgeHitter, c4->all_edges());
  CHECK(s.is_terminal());
  CHECK(legal_moves(s).empty());
}

TEST_CASE("playing vertex 0 of C4 covers its two edges") {
  const GameState s = apply_move(GameState(share(cycle4()), PlayerRole::EdgeHitter), 0);
  CHECK(edges_of(s.covered()) == std::vector<EdgeId>{0, 3});
  CHECK(s.to_move() == PlayerRole::Staller);
  CHECK(s.length() == 1);
  CHECK(s.history().back().newly_covered == (edge_bit(0) | edge_bit(3)));
}

TEST_CASE("a single edge ends after one move") {
  const GameState s = GameState(share(testing_support::single_edge(3)), PlayerRole::EdgeHitter).apply(0);
  CHECK(s.is_terminal());
  CHECK(s.length() == 1);
}

TEST_CASE("a played vertex cannot be replayed") {
  const GameState s = GameState(share(cycle4()), PlayerRole::EdgeHitter).apply(0);
  try {
    (void)s.apply(0);
    FAIL("expected IllegalMove");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllegalMove);
    CHECK(std::string(e.what()).find("hits no uncovered edge") != std::string::npos);
  }
}

TEST_CASE("random playouts respect the game invariants") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto h = share(random_k_uniform({.n = 9, .m = 8, .k = 3, .seed = seed}));
    const int tau = transversal_number(*h);
    Rng rng(seed);
    GameState s(h, seed % 2 ? PlayerRole::EdgeHitter : PlayerRole::Staller);
    std::vector<VertexId> played;
    while (!s.is_terminal()) {
      const auto moves = legal_moves(s);
      for (VertexId v : played) CHECK_FALSE(s.is_legal(v));
      const VertexId v = moves[static_cast<std::size_t>(uniform_below(rng, moves.size()))];
      const EdgeMask before = s.covered();
      s = s.apply(v);
      CHECK((s.covered() & before) == before);
      CHECK(s.covered() != before);
      played.push_back(v);
    }
    CHECK(s.length() <= h->size());
    CHECK(s.length() >= tau);
  }
}

TEST_CASE("transcripts serialize one JSON object per line") {
  GameState s(share(cycle4()), PlayerRole::Staller);
  s = s.apply(1).apply(3);
  const Transcript t = transcript_of(s);
  CHECK(t.length() == 2);
  CHECK(t.complete);
  std::vector<nlohmann::json> lines;
  std::istringstream in(t.to_jsonl());
  for (std::string line; std::getline(in, line);) lines.push_back(nlohmann::json::parse(line));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["type"] == "header");
  CHECK(lines[0]["first"] == "Staller");
  CHECK(lines[1]["type"] == "move");
  CHECK(lines[1]["vertex"] == 1);
  CHECK(lines[2]["player"] == "EdgeHitter");
  CHECK(lines[3]["type"] == "summary");
  CHECK(lines[3]["length"] == 2);
}
