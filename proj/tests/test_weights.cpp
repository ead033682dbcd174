#include <doctest.h>

#include "constructions.hpp"
#include "error.hpp"
#include "game.hpp"
#include "generators.hpp"
#include "strategies.hpp"
#include "support.hpp"
#include "weights.hpp"

using namespace tgame;
using testing_support::edge_list;
using testing_support::share;

TEST_CASE("weight3 of small examples") {
  const Hypergraph f = figure2();
  CHECK(weight3(ResidualView(f, 0)) == 144);
  CHECK(bound_rhs_3A(f) == 144);
  const Hypergraph e = testing_support::single_edge(3);
  CHECK(weight3(ResidualView(e, 0)) == 48);
  CHECK(weight3(ResidualView(e, 1)) == 0);
}

TEST_CASE("weight3 matches a degree census") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Hypergraph h = random_k_uniform({.n = 9, .m = 10, .k = 3, .seed = seed});
    Rng rng(seed);
    const EdgeMask covered = rng() & h.all_edges();
    CHECK(weight3(ResidualView(h, covered)) == oracle::weight3(h.order(), edge_list(h), covered));
    CHECK(weight3(ResidualView(h, 0)) <= 15LL * (h.order() + h.size()));
  }
}

TEST_CASE("weight3 rejects non-uniform residuals") {
  const Hypergraph c4 = cycle4();
  try {
    (void)weight3(ResidualView(c4, 0));
    FAIL("expected NotUniform");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUniform);
  }
}

TEST_CASE("weight4 of a single edge") {
  const Hypergraph e = testing_support::single_edge(4);
  CHECK(weight4(ResidualView(e, 0), 1) == 3024);
}

TEST_CASE("fresh move in a 2-regular linear 4-uniform component") {
  const auto h = share(testing_support::k5_dual());
  const GameState s(h, PlayerRole::EdgeHitter);
  WeightMeter meter(WeightScheme::Uniform4, s);
  CHECK(meter.delta_star() == 2);
  CHECK(meter.current() == 10 * 750 + 5 * 852);
  CHECK(meter.advance(s.apply(0)) == 3696);
}

TEST_CASE("playing a yellow vertex when the maximum degree is 3") {
  const auto h = share(Hypergraph::build(
      13, {{0, 1, 2, 3}, {0, 4, 5, 6}, {0, 7, 8, 9}, {1, 4, 7, 10}, {2, 5, 8, 11}, {3, 6, 9, 12}}));
  const GameState s(h, PlayerRole::EdgeHitter);
  CHECK(color_of(0, s.residual(), WeightScheme::Uniform4) == Color::Yellow);
  WeightMeter meter(WeightScheme::Uniform4, s);
  CHECK(meter.delta_star() == 3);
  CHECK(meter.advance(s.apply(0)) == 3 * 852 + 845 + 95 * 9);
}

TEST_CASE("colors by residual degree") {
  CHECK(color_of(0, WeightScheme::Uniform3) == Color::Red);
  CHECK(color_of(1, WeightScheme::Uniform3) == Color::Blue);
  CHECK(color_of(2, WeightScheme::Uniform3) == Color::Green);
  CHECK(color_of(3, WeightScheme::Uniform3) == Color::White);
  CHECK(color_of(3, WeightScheme::Uniform4) == Color::Yellow);
  CHECK(color_of(4, WeightScheme::Uniform4) == Color::White);
  CHECK(color_name(Color::Green) == "green");
}

TEST_CASE("cells of the 4-uniform table that cannot occur") {
  for (auto [c, band] : {std::pair{Color::White, DeltaBand::Three}, std::pair{Color::White, DeltaBand::AtMost2},
                         std::pair{Color::Yellow, DeltaBand::AtMost2}}) {
    try {
      (void)vertex_weight4(c, band);
      FAIL("expected UnreachableCell");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnreachableCell);
    }
  }
}

TEST_CASE("4-uniform vertex weights fall with the band and with the color") {
  const std::vector<DeltaBand> bands{DeltaBand::AtLeast5, DeltaBand::Four, DeltaBand::Three, DeltaBand::AtMost2};
  const std::vector<Color> colors{Color::White, Color::Yellow, Color::Green, Color::Blue};
  for (std::size_t ci = 0; ci < colors.size(); ++ci) {
    long long previous = 1LL << 40;
    for (std::size_t bi = 0; bi < bands.size(); ++bi) {
      long long w = 0;
      try {
        w = vertex_weight4(colors[ci], bands[bi]);
      } catch (const Error&) {
        continue;
      }
      CHECK(w <= previous);
      previous = w;
      if (ci > 0) {
        std::optional<long long> above;
        try {
          above = vertex_weight4(colors[ci - 1], bands[bi]);
        } catch (const Error&) {
        }
        if (above) CHECK(w <= *above);
      }
    }
  }
  CHECK(band_of(7) == DeltaBand::AtLeast5);
  CHECK(band_of(4) == DeltaBand::Four);
  CHECK(band_of(0) == DeltaBand::AtMost2);
}

TEST_CASE("every legal move lowers weight3 by at least 26") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto h = share(random_k_uniform({.n = 9, .m = 9, .k = 3, .seed = seed}));
    RandomStrategy a(seed), b(seed + 1000);
    const MatchResult r = play_match(h, a, b, PlayerRole::EdgeHitter, WeightScheme::Uniform3);
    REQUIRE(r.ledger);
    for (long long d : r.ledger->decreases) CHECK(d >= scheme3::kMinMoveDecrease);
    GameState s(h, PlayerRole::EdgeHitter);
    for (long long d : move_decreases3(s)) CHECK(d >= scheme3::kMinMoveDecrease);
  }
}

TEST_CASE("the frozen maximum degree only changes on Edge-hitter's turn") {
  const auto h = share(random_k_uniform({.n = 10, .m = 10, .k = 4, .seed = 5}));
  GameState s(h, PlayerRole::EdgeHitter);
  DeltaStarTracker tracker(s);
  CHECK(tracker.value() == s.residual().max_degree());
  while (!s.is_terminal()) {
    s = s.apply(legal_moves(s).front());
    const int before = tracker.value();
    tracker.advance(s);
    if (s.to_move() == PlayerRole::Staller) {
      CHECK(tracker.value() == before);
    } else {
      CHECK(tracker.value() == s.residual().max_degree());
    }
  }
}
