#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "constructions.hpp"
#include "game.hpp"
#include "solver.hpp"
#include "weights.hpp"

namespace tgame {

struct Decision {
  VertexId vertex = -1;
  // Short tag naming the rule that fired.
  std::string rule;
  // Set when the strategy had to fall back outside its own rule set.
  bool flagged = false;
};

// A move-selection policy. choose() may update internal context (for example
// a component the policy has committed to); clone() copies that context so a
// search can branch. Given equal positions and equal context, choices are
// identical.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string name() const = 0;
  // Returns a legal move of the non-terminal position s.
  virtual Decision choose(const GameState& s) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;
  // Serialized internal context; empty for policies that depend on the
  // position alone.
  virtual std::string context_key() const { return {}; }
};

// Optimal play from the exact solver.
class ExactStrategy final : public Strategy {
 public:
  explicit ExactStrategy(SolveLimits limits = {}) : limits_(limits) {}
  std::string name() const override { return "exact"; }
  Decision choose(const GameState& s) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ExactStrategy>(*this); }

 private:
  SolveLimits limits_;
  std::shared_ptr<GameSolver> solver_;
};

// Covers as many new edges as possible; lowest id on ties.
class GreedyStrategy final : public Strategy {
 public:
  std::string name() const override { return "greedy"; }
  Decision choose(const GameState& s) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<GreedyStrategy>(*this); }
};

// Uniform over legal moves, drawn from a generator seeded by the seed and the
// position, so the same position always gets the same move.
class RandomStrategy final : public Strategy {
 public:
  explicit RandomStrategy(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "random:" + std::to_string(seed_); }
  Decision choose(const GameState& s) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(*this); }

 private:
  std::uint64_t seed_;
};

// Edge-hitter on 3-uniform hypergraphs, aiming at an average weight decrease
// of 48 per move. Rules in priority order:
//   trivial     one vertex finishes the game and the weight is >= 48
//   committed   a committed 2-regular linear component still has a green
//               vertex: play its green vertex with most blue neighbors
//   max_degree  maximum degree >= 4: a maximum-degree vertex
//   decrease68  a move decreasing the weight by >= 68: the largest decrease
//   white       a white vertex
//   decrease64  a move decreasing the weight by >= 64: the largest decrease
//   commit      commit to the first 2-regular linear component
//   isolated    a vertex of an isolated edge
// Ties go to the lowest vertex id.
class EdgeHitterHierarchy3 final : public Strategy {
 public:
  std::string name() const override { return "eh3"; }
  Decision choose(const GameState& s) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<EdgeHitterHierarchy3>(*this);
  }
  std::string context_key() const override;

 private:
  std::vector<VertexId> committed_;
};

// Edge-hitter on 4-uniform hypergraphs, aiming at 3024 per move:
//   trivial       one vertex finishes the game and the weight is >= 3024
//   committed     as for the 3-uniform policy
//   max_degree    maximum degree >= 3: a maximum-degree vertex
//   overlap       two uncovered edges share >= 2 vertices: a shared vertex
//   green_blue    a green vertex with a blue neighbor
//   isolated      a vertex of an isolated edge
//   commit        commit to the first 2-regular linear component
class EdgeHitterHierarchy4 final : public Strategy {
 public:
  std::string name() const override { return "eh4"; }
  Decision choose(const GameState& s) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<EdgeHitterHierarchy4>(*this);
  }
  std::string context_key() const override;

 private:
  std::vector<VertexId> committed_;
};

// Staller on a labeled k-corona: play a degree-1 vertex whose edge is an
// attached edge of the smallest positive weight 2^(j-1) still uncovered.
class StallerCorona final : public Strategy {
 public:
  explicit StallerCorona(CoronaLabels labels) : labels_(std::move(labels)) {}
  std::string name() const override { return "corona"; }
  Decision choose(const GameState& s) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<StallerCorona>(*this); }

 private:
  CoronaLabels labels_;
};

// Parses "exact", "greedy", "random:SEED", "eh3", "eh4", "corona". The
// corona policy needs labels. Throws UnknownName.
std::unique_ptr<Strategy> make_strategy(std::string_view spec,
                                        const std::optional<CoronaLabels>& labels = std::nullopt,
                                        const SolveLimits& limits = {});

// Weight decreases per move and their running sums.
struct MoveLedger {
  long long initial_weight = 0;
  std::vector<long long> decreases;
  std::vector<long long> running;

  void push(long long decrease) {
    decreases.push_back(decrease);
    running.push_back((running.empty() ? 0 : running.back()) + decrease);
  }
};

struct MatchResult {
  Transcript transcript;
  std::optional<MoveLedger> ledger;
};

// Alternates the two policies until the game ends. Policies are cloned, so
// the arguments are left untouched.
MatchResult play_match(std::shared_ptr<const Hypergraph> h, const Strategy& edge_hitter,
                       const Strategy& staller, PlayerRole first,
                       std::optional<WeightScheme> scheme = std::nullopt, EdgeMask precovered = 0);

// Per-move weight decreases of every legal move at s under the 3-uniform
// scheme, indexed like legal_moves(s).
std::vector<long long> move_decreases3(const GameState& s);

}  // namespace tgame
