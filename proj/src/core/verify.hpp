#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "hypergraph.hpp"
#include "solver.hpp"

namespace tgame {

// One inequality lhs <= rhs evaluated on one instance. Fractional bounds are
// cross-multiplied, so both sides are integers.
struct BoundCheck {
  std::string name;
  bool applicable = false;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = true;
  long long slack = 0;
  std::string instance;
};

BoundCheck make_check(std::string name, long long lhs, long long rhs, std::string instance = {});
BoundCheck inapplicable_check(std::string name, std::string instance = {});

// Every check name check_bounds() knows, in report order.
const std::vector<std::string>& bound_check_names();

// Solves h once and evaluates every bound. Isolated vertices are dropped
// before counting n, which only tightens the bounds.
std::vector<BoundCheck> check_bounds(const Hypergraph& h, const std::string& instance = {},
                                     const SolveLimits& limits = {},
                                     const SolverOptions& options = {});

// As above with the numbers already known.
std::vector<BoundCheck> evaluate_bounds(const Hypergraph& h, const GameNumbers& numbers,
                                        const std::string& instance = {});

struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t inapplicable = 0;
  std::optional<long long> min_slack;
  std::string min_slack_instance;
};

class Report {
 public:
  explicit Report(std::string corpus = {}) : corpus_(std::move(corpus)) {}

  void add(const BoundCheck& c);
  void count_instance() { ++instances_; }
  // Associative: merging per-worker reports in any grouping gives the same
  // totals.
  void merge(const Report& other);

  const std::string& corpus() const { return corpus_; }
  std::uint64_t instances() const { return instances_; }
  const std::map<std::string, CheckTally>& tallies() const { return tallies_; }
  const std::vector<BoundCheck>& violations() const { return violations_; }
  bool ok() const { return violations_.empty(); }

  std::string to_json() const;

 private:
  std::string corpus_;
  std::uint64_t instances_ = 0;
  std::map<std::string, CheckTally> tallies_;
  std::vector<BoundCheck> violations_;
};

// Samples `trials` nested pairs B <= A of covered edge sets and checks that
// the game from H|A is never longer than from H|B, for both starters. Also
// checks that dominated-move pruning leaves values unchanged on the fresh
// game and on every sampled A.
Report check_continuation(const Hypergraph& h, int trials, std::uint64_t seed,
                          const std::string& instance = {}, const SolveLimits& limits = {});

struct CoronaReport {
  GameNumbers numbers;
  // Longest game Staller's corona rule forces against a best-responding
  // Edge-hitter.
  int rule_length_edge_hitter_start = 0;
  int rule_length_staller_start = 0;
  Report report;
};

// Builds the k-corona of base and checks tau_g = 2 tau - 1, tau_g' = 2 tau,
// and that the corona rule alone forces those lengths. Throws
// HypothesisViolated unless base has at most 2^(k-1) - 1 vertices.
CoronaReport check_corona(const Hypergraph& base, int k, int pendant_size,
                          const SolveLimits& limits = {});

struct SweepOptions {
  // Check names to report; empty means all.
  std::vector<std::string> checks;
  int threads = 1;
  SolveLimits limits;
};

struct SweepResult {
  std::string csv;
  Report report;
};

inline constexpr const char* kSweepCsvHeader =
    "family,n,m,k,seed,tau,tau_g,tau_g_prime,check,lhs,rhs,slack,holds";

// One CSV row per applicable (instance, check), instances in corpus order.
SweepResult experiment_sweep(const std::vector<CorpusEntry>& corpus, const std::string& descriptor,
                             const SweepOptions& options = {});

// Stable identifier used in reports: family:seed, or family#index.
std::string instance_id(const CorpusEntry& entry, std::size_t index);

}  // namespace tgame
