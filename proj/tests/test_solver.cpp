#include <doctest.h>

#include "constructions.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "solver.hpp"
#include "strategies.hpp"
#include "support.hpp"

using namespace tgame;
using testing_support::edge_list;
using testing_support::h1;
using testing_support::share;

TEST_CASE("transversal numbers of small examples") {
  CHECK(transversal_number(cycle4()) == 2);
  CHECK(transversal_number(complete_uniform(4, 3)) == 2);
  CHECK(transversal_number(h1()) == 3);
  CHECK(transversal_number(Hypergraph::build(3, {})) == 0);
}

TEST_CASE("game values of small examples") {
  CHECK(game_value(GameState(share(h1()), PlayerRole::EdgeHitter)) == 4);
  CHECK(game_value(GameState(share(testing_support::single_edge(3)), PlayerRole::EdgeHitter)) == 1);
  CHECK(game_value(GameState(share(cycle4()), PlayerRole::EdgeHitter)) == 3);
  CHECK(game_value(GameState(share(figure2()), PlayerRole::EdgeHitter)) == 3);
  CHECK(game_value(GameState(share(Hypergraph::build(2, {})), PlayerRole::EdgeHitter)) == 0);
}

TEST_CASE("best moves attain the value") {
  const auto c4 = share(cycle4());
  GameSolver solver(c4);
  const GameState s(c4, PlayerRole::EdgeHitter);
  const VertexId v = solver.best_move(s);
  CHECK(v == 0);
  CHECK(1 + solver.value(s.apply(v)) == solver.value(s));

  const GameState done(c4, PlayerRole::EdgeHitter, c4->all_edges());
  CHECK_THROWS_AS(solver.best_move(done), Error);
}

TEST_CASE("solver agrees with the brute-force oracles") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int k = 2 + static_cast<int>(seed % 3);
    const auto h = share(random_k_uniform({.n = 7, .m = 2 + static_cast<int>(seed % 7), .k = k, .seed = seed}));
    const auto edges = edge_list(*h);
    CHECK(transversal_number(*h) == oracle::transversal_number(h->order(), edges));
    for (PlayerRole first : {PlayerRole::EdgeHitter, PlayerRole::Staller}) {
      const int expected = oracle::game_value(h->order(), edges, first == PlayerRole::EdgeHitter);
      CHECK(game_value(GameState(h, first)) == expected);
      CHECK(game_value(GameState(h, first), {}, {.prune_dominated = false}) == expected);
    }
    const EdgeMask pre = (seed * 0x5851F42D4C957F2DULL) & h->all_edges();
    CHECK(game_value(GameState(h, PlayerRole::Staller, pre)) ==
          oracle::game_value(h->order(), edges, false, pre));
  }
}

TEST_CASE("solve_numbers reports all three values") {
  const GameNumbers g = solve_numbers(share(h1()));
  CHECK(g.tau == 3);
  CHECK(g.tau_g == 4);
  CHECK(g.tau_g_prime == 3);
  CHECK(g.memo_entries > 0);
}

TEST_CASE("worst case against the exact policy equals the game value") {
  const auto h = share(h1());
  const ExactStrategy exact;
  CHECK(worst_case_vs_strategy(h, exact, PlayerRole::EdgeHitter).length == 4);
  CHECK(worst_case_vs_strategy(h, exact, PlayerRole::Staller).length == 3);
}

TEST_CASE("worst case on two isolated 3-edges") {
  const auto h = share(isolated_edges(2, 3));
  CHECK(worst_case_vs_strategy(h, GreedyStrategy{}, PlayerRole::EdgeHitter).length == 2);
}

TEST_CASE("worst case of eh3 on the figure2 hypergraph") {
  const auto h = share(figure2());
  const StrategyEvaluation ev = worst_case_vs_strategy(h, EdgeHitterHierarchy3{}, PlayerRole::EdgeHitter);
  CHECK(ev.length == 3);
  CHECK(ev.witness.length() == 3);
  CHECK(ev.witness.complete);
}

TEST_CASE("a searching Edge-hitter against a fixed Staller") {
  const auto h = share(cycle4());
  const StrategyEvaluation ev =
      evaluate_strategy(GameState(h, PlayerRole::EdgeHitter), ExactStrategy{}, PlayerRole::Staller);
  CHECK(ev.length == 3);
}

TEST_CASE("threaded and single-threaded solves agree") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto h = share(random_k_uniform({.n = 10, .m = 12, .k = 3, .seed = seed}));
    const GameNumbers one = solve_numbers(h, {}, {.threads = 1});
    const GameNumbers four = solve_numbers(h, {}, {.threads = 4});
    CHECK(one.tau_g == four.tau_g);
    CHECK(one.tau_g_prime == four.tau_g_prime);
  }
}

TEST_CASE("limits are enforced") {
  const auto h = share(random_k_uniform({.n = 12, .m = 14, .k = 3, .seed = 3}));
  try {
    GameSolver solver(h, {.max_edges = 10});
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LimitExceeded);
  }
  GameSolver tiny(h, {.max_nodes = 5}, {.prune_dominated = false});
  CHECK_THROWS_AS(tiny.value(GameState(h, PlayerRole::EdgeHitter)), Error);
}
