#include <doctest.h>

#include "constructions.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "solver.hpp"
#include "strategies.hpp"
#include "support.hpp"
#include "weights.hpp"

using namespace tgame;
using testing_support::share;

TEST_CASE("eh3 opens the figure2 hypergraph with a 64 decrease") {
  const GameState s(share(figure2()), PlayerRole::EdgeHitter);
  EdgeHitterHierarchy3 eh;
  const Decision d = eh.choose(s);
  CHECK(d.vertex == 0);
  CHECK(d.rule == "decrease64");
  CHECK_FALSE(d.flagged);
  WeightMeter meter(WeightScheme::Uniform3, s);
  CHECK(meter.advance(s.apply(d.vertex)) == 64);
}

TEST_CASE("eh3 on two isolated edges plays a vertex of one of them") {
  const GameState s(share(isolated_edges(2, 3)), PlayerRole::EdgeHitter);
  EdgeHitterHierarchy3 eh;
  const Decision d = eh.choose(s);
  CHECK(d.vertex == 0);
  CHECK(d.rule == "isolated");
}

TEST_CASE("eh3 finishes a single edge") {
  const GameState s(share(testing_support::single_edge(3)), PlayerRole::EdgeHitter);
  EdgeHitterHierarchy3 eh;
  CHECK(eh.choose(s).rule == "trivial");
}

TEST_CASE("eh3 takes a vertex of degree 4") {
  const GameState s(share(Hypergraph::build(10, {{0, 1, 5}, {2, 3, 5}, {4, 5, 6}, {5, 7, 8}, {0, 2, 9}})),
                    PlayerRole::EdgeHitter);
  EdgeHitterHierarchy3 eh;
  const Decision d = eh.choose(s);
  CHECK(d.vertex == 5);
  CHECK(d.rule == "max_degree");
}

TEST_CASE("eh3 refuses to play Staller") {
  const GameState s(share(figure2()), PlayerRole::Staller);
  EdgeHitterHierarchy3 eh;
  CHECK_THROWS_AS(eh.choose(s), Error);
}

TEST_CASE("eh4 on a 2-regular linear component commits to it") {
  const GameState s(share(testing_support::k5_dual()), PlayerRole::EdgeHitter);
  EdgeHitterHierarchy4 eh;
  const Decision first = eh.choose(s);
  CHECK(first.rule == "commit");
  CHECK_FALSE(eh.context_key().empty());
  const GameState after = s.apply(first.vertex);
  // Staller's reply, then the committed component again.
  const GameState next = after.apply(legal_moves(after).back());
  if (!next.is_terminal()) CHECK(eh.choose(next).rule != "fallback");
}

TEST_CASE("the corona rule opens with a pendant vertex of a weight-1 edge") {
  const LabeledHypergraph c = k_corona(testing_support::single_edge(3), 3, 2);
  const GameState s(c.graph, PlayerRole::Staller);
  StallerCorona rule(*c.labels);
  const Decision d = rule.choose(s);
  CHECK(d.rule == "lightest_pendant");
  CHECK(c.graph->degree(d.vertex) == 1);
  const EdgeId e = c.graph->incident(d.vertex).front();
  CHECK(c.labels->tags[static_cast<std::size_t>(e)].attached);
  CHECK(c.labels->tags[static_cast<std::size_t>(e)].j == 1);
}

TEST_CASE("the corona rule moves to weight 2 once weight-1 edges are gone") {
  const LabeledHypergraph c = k_corona(testing_support::single_edge(3), 3, 2);
  EdgeMask covered = 0;
  long long total = 0;
  for (EdgeId e = 0; e < c.graph->size(); ++e) {
    total += c.labels->edge_weight(e);
    if (c.labels->tags[static_cast<std::size_t>(e)].j == 1) covered |= edge_bit(e);
  }
  CHECK(total == 3 * 7);
  const GameState s(c.graph, PlayerRole::Staller, covered);
  StallerCorona rule(*c.labels);
  const Decision d = rule.choose(s);
  const EdgeId e = c.graph->incident(d.vertex).back();
  CHECK(c.labels->tags[static_cast<std::size_t>(e)].j == 2);
}

TEST_CASE("greedy covers the most edges") {
  GreedyStrategy g;
  CHECK(g.choose(GameState(share(cycle4()), PlayerRole::EdgeHitter)).vertex == 0);
}

TEST_CASE("random choices depend only on seed and position") {
  const auto h = share(random_k_uniform({.n = 9, .m = 9, .k = 3, .seed = 2}));
  const GameState s(h, PlayerRole::EdgeHitter);
  RandomStrategy a(7), b(7);
  CHECK(a.choose(s).vertex == b.choose(s).vertex);
  CHECK(a.choose(s).vertex == a.choose(s).vertex);
}

TEST_CASE("make_strategy parses names") {
  CHECK(make_strategy("exact")->name() == "exact");
  CHECK(make_strategy("random:42")->name() == "random:42");
  CHECK(make_strategy("eh4")->name() == "eh4");
  CHECK_THROWS_AS(make_strategy("corona"), Error);
  CHECK_THROWS_AS(make_strategy("random:x"), Error);
  try {
    (void)make_strategy("minimax");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }
}

TEST_CASE("a match on a single edge lasts one move and drops 48") {
  const auto h = share(testing_support::single_edge(3));
  const MatchResult r = play_match(h, EdgeHitterHierarchy3{}, ExactStrategy{}, PlayerRole::EdgeHitter,
                                   WeightScheme::Uniform3);
  CHECK(r.transcript.length() == 1);
  REQUIRE(r.ledger);
  CHECK(r.ledger->decreases == std::vector<long long>{48});
}

TEST_CASE("exact against exact on H1 lasts tau_g moves") {
  const auto h = share(testing_support::h1());
  const MatchResult r = play_match(h, ExactStrategy{}, ExactStrategy{}, PlayerRole::EdgeHitter);
  CHECK(r.transcript.length() == 4);
  CHECK(r.transcript.complete);
  CHECK_FALSE(r.ledger);
}

TEST_CASE("policies always return legal moves and ledgers add up") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    for (int k : {3, 4}) {
      const auto h = share(random_k_uniform({.n = 11, .m = 9, .k = k, .seed = seed}));
      const auto eh = make_strategy(k == 3 ? "eh3" : "eh4");
      RandomStrategy staller(seed);
      const WeightScheme scheme = k == 3 ? WeightScheme::Uniform3 : WeightScheme::Uniform4;
      const MatchResult r = play_match(h, *eh, staller, PlayerRole::EdgeHitter, scheme);
      REQUIRE(r.ledger);
      const Transcript& t = r.transcript;
      CHECK(t.complete);
      REQUIRE(t.initial_weight);
      REQUIRE(t.final_weight);
      CHECK(*t.final_weight == 0);
      CHECK(r.ledger->running.back() == *t.initial_weight - *t.final_weight);

      // Replay to confirm each prefix sum against a fresh weight.
      GameState s(h, PlayerRole::EdgeHitter);
      WeightMeter meter(scheme, s);
      for (std::size_t i = 0; i < t.moves.size(); ++i) {
        CHECK(s.is_legal(t.moves[i].vertex));
        s = s.apply(t.moves[i].vertex);
        meter.advance(s);
        CHECK(r.ledger->running[i] == *t.initial_weight - meter.current());
      }
      CHECK(s.is_terminal());
    }
  }
}
