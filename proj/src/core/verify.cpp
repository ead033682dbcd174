#include "verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "constructions.hpp"
#include "error.hpp"
#include "strategies.hpp"
#include "weights.hpp"

namespace tgame {

BoundCheck make_check(std::string name, long long lhs, long long rhs, std::string instance) {
  BoundCheck c;
  c.name = std::move(name);
  c.applicable = true;
  c.lhs = lhs;
  c.rhs = rhs;
  c.holds = lhs <= rhs;
  c.slack = rhs - lhs;
  c.instance = std::move(instance);
  return c;
}

BoundCheck inapplicable_check(std::string name, std::string instance) {
  BoundCheck c;
  c.name = std::move(name);
  c.instance = std::move(instance);
  return c;
}

const std::vector<std::string>& bound_check_names() {
  static const std::vector<std::string> names = {
      "obs1_tau_le_taug",        "obs1_taug_le_2tau_minus_1", "obs1_tau_le_taug_prime",
      "obs1_taug_prime_le_2tau", "diff_taug_taug_prime",      "thm1_4_11",
      "thm2_2uniform",           "graph_tau_third",           "thm3uniform_5_16",
      "thm3uniformA",            "thm3unif_weight",           "cor3_delta2_3_10",
      "cor3_delta2_half_n",      "cor3_2regular_3_4_m",       "cor3_staller_start",
      "thm4uniform_71_252",      "thm4unif_weight",           "cor4_delta2_7_18_n",
      "cor4_2regular_7_9_m",     "cor4_staller_start",
  };
  return names;
}

namespace {

// h with isolated vertices removed and the rest renumbered in order.
Hypergraph drop_isolated(const Hypergraph& h) {
  std::vector<VertexId> id(static_cast<std::size_t>(h.order()), -1);
  VertexId next = 0;
  for (VertexId v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 0) id[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<std::vector<VertexId>> edges;
  for (const Edge& e : h.edges()) {
    std::vector<VertexId> mapped;
    for (VertexId v : e) mapped.push_back(id[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::build(next, edges);
}

}  // namespace

std::vector<BoundCheck> evaluate_bounds(const Hypergraph& full, const GameNumbers& g,
                                        const std::string& instance) {
  const Hypergraph h = drop_isolated(full);
  const StructureSummary s = structure_queries(h);
  const long long n = h.order();
  const long long m = h.size();
  const long long tau = g.tau, tg = g.tau_g, tgp = g.tau_g_prime;
  const bool has_edges = m >= 1;
  const std::optional<int> k = has_edges ? s.uniformity : std::nullopt;
  const bool delta2 = s.max_degree <= 2;
  const bool two_regular = s.is_regular(2);

  std::vector<BoundCheck> out;
  auto when = [&](bool applicable, const char* name, long long lhs, long long rhs) {
    out.push_back(applicable ? make_check(name, lhs, rhs, instance) : inapplicable_check(name, instance));
  };

  when(true, "obs1_tau_le_taug", tau, tg);
  when(has_edges, "obs1_taug_le_2tau_minus_1", tg, 2 * tau - 1);
  when(true, "obs1_tau_le_taug_prime", tau, tgp);
  when(true, "obs1_taug_prime_le_2tau", tgp, 2 * tau);
  when(true, "diff_taug_taug_prime", std::llabs(tg - tgp), 1);
  when(has_edges && s.min_edge_size >= 2 && !is_cycle4(h), "thm1_4_11", 11 * tg, 4 * (n + m));
  when(k == 2, "thm2_2uniform", 3 * tg, n + m + 1);
  // Simple graphs: every edge is a 2-set and build() already merged repeats.
  when(k == 2, "graph_tau_third", 3 * tau, n + m);

  const bool k3 = k == 3;
  when(k3, "thm3uniform_5_16", 16 * tg, 5 * (n + m));
  when(k3, "thm3uniformA", 48 * tg, k3 ? bound_rhs_3A(h) : 0);
  when(k3, "thm3unif_weight", 48 * tg, k3 ? weight3(ResidualView(h, 0)) : 0);
  when(k3 && delta2, "cor3_delta2_3_10", 10 * tg, 3 * (n + m));
  when(k3 && delta2, "cor3_delta2_half_n", 2 * tg, n);
  when(k3 && two_regular, "cor3_2regular_3_4_m", 4 * tg, 3 * m);
  when(k3, "cor3_staller_start", 16 * tgp, 5 * n + 5 * m + 6);

  const bool k4 = k == 4;
  when(k4, "thm4uniform_71_252", 252 * tg, 71 * (n + m));
  when(k4, "thm4unif_weight", 3024 * tg, k4 ? weight4(ResidualView(h, 0), s.max_degree) : 0);
  when(k4 && delta2, "cor4_delta2_7_18_n", 18 * tg, 7 * n);
  when(k4 && two_regular, "cor4_2regular_7_9_m", 9 * tg, 7 * m);
  when(k4, "cor4_staller_start", 252 * tgp, 71 * n + 71 * m + 110);
  return out;
}

std::vector<BoundCheck> check_bounds(const Hypergraph& h, const std::string& instance,
                                     const SolveLimits& limits, const SolverOptions& options) {
  const GameNumbers g = solve_numbers(std::make_shared<const Hypergraph>(h), limits, options);
  return evaluate_bounds(h, g, instance);
}

void Report::add(const BoundCheck& c) {
  CheckTally& t = tallies_[c.name];
  if (!c.applicable) {
    ++t.inapplicable;
    return;
  }
  if (c.holds) {
    ++t.passed;
  } else {
    ++t.failed;
    violations_.push_back(c);
  }
  if (!t.min_slack || c.slack < *t.min_slack) {
    t.min_slack = c.slack;
    t.min_slack_instance = c.instance;
  }
}

void Report::merge(const Report& other) {
  instances_ += other.instances_;
  for (const auto& [name, o] : other.tallies_) {
    CheckTally& t = tallies_[name];
    t.passed += o.passed;
    t.failed += o.failed;
    t.inapplicable += o.inapplicable;
    if (o.min_slack && (!t.min_slack || *o.min_slack < *t.min_slack)) {
      t.min_slack = o.min_slack;
      t.min_slack_instance = o.min_slack_instance;
    }
  }
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["corpus"] = corpus_;
  j["instances"] = instances_;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [name, t] : tallies_) {
    nlohmann::ordered_json row;
    row["passed"] = t.passed;
    row["failed"] = t.failed;
    row["inapplicable"] = t.inapplicable;
    if (t.min_slack) {
      row["min_slack"] = *t.min_slack;
      row["min_slack_instance"] = t.min_slack_instance;
    } else {
      row["min_slack"] = nullptr;
    }
    checks[name] = row;
  }
  j["checks"] = checks;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const BoundCheck& c : violations_) {
    violations.push_back(
        {{"instance", c.instance}, {"check", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}});
  }
  j["violations"] = violations;
  j["ok"] = ok();
  return j.dump(2);
}

Report check_continuation(const Hypergraph& h, int trials, std::uint64_t seed,
                          const std::string& instance, const SolveLimits& limits) {
  auto graph = std::make_shared<const Hypergraph>(h);
  GameSolver pruned(graph, limits);
  GameSolver plain(graph, limits, SolverOptions{.prune_dominated = false});
  const EdgeMask all = h.all_edges();
  Rng rng(seed);
  Report report("continuation");
  report.count_instance();

  auto compare_pruning = [&](EdgeMask uncovered) {
    for (PlayerRole p : {PlayerRole::EdgeHitter, PlayerRole::Staller}) {
      const long long a = pruned.value(uncovered, p);
      const long long b = plain.value(uncovered, p);
      report.add(make_check(p == PlayerRole::EdgeHitter ? "pruning_exact_eh" : "pruning_exact_staller",
                            std::llabs(a - b), 0, instance));
    }
  };

  compare_pruning(all);
  for (int t = 0; t < trials; ++t) {
    const EdgeMask a = rng() & all;
    const EdgeMask b = rng() & a;
    for (PlayerRole p : {PlayerRole::EdgeHitter, PlayerRole::Staller}) {
      const std::string name =
          p == PlayerRole::EdgeHitter ? "continuation_eh_start" : "continuation_staller_start";
      report.add(make_check(name, pruned.value(all & ~a, p), pruned.value(all & ~b, p), instance));
    }
    compare_pruning(all & ~a);
  }
  return report;
}

CoronaReport check_corona(const Hypergraph& base, int k, int pendant_size, const SolveLimits& limits) {
  if (k < 1 || k > 62 || static_cast<long long>(base.order()) > (1LL << (k - 1)) - 1) {
    throw Error(ErrorCode::HypothesisViolated,
                "corona needs base order <= 2^(k-1) - 1; got n = " + std::to_string(base.order()) +
                    ", k = " + std::to_string(k));
  }
  const LabeledHypergraph corona = k_corona(base, k, pendant_size);
  CoronaReport out;
  out.numbers = solve_numbers(corona.graph, limits);
  const std::string id = "corona(n=" + std::to_string(base.order()) + ",k=" + std::to_string(k) + ")";
  const long long tau = out.numbers.tau;

  StallerCorona rule(*corona.labels);
  out.rule_length_edge_hitter_start =
      evaluate_strategy(GameState(corona.graph, PlayerRole::EdgeHitter), rule, PlayerRole::Staller, limits)
          .length;
  out.rule_length_staller_start =
      evaluate_strategy(GameState(corona.graph, PlayerRole::Staller), rule, PlayerRole::Staller, limits)
          .length;

  Report& r = out.report;
  r = Report("corona");
  r.count_instance();
  r.add(make_check("corona_taug_eq_2tau_minus_1", std::llabs(out.numbers.tau_g - (2 * tau - 1)), 0, id));
  r.add(make_check("corona_taug_prime_eq_2tau", std::llabs(out.numbers.tau_g_prime - 2 * tau), 0, id));
  r.add(make_check("corona_rule_eh_start", 2 * tau - 1, out.rule_length_edge_hitter_start, id));
  r.add(make_check("corona_rule_staller_start", 2 * tau, out.rule_length_staller_start, id));
  return out;
}

std::string instance_id(const CorpusEntry& entry, std::size_t index) {
  if (entry.seed) return entry.family + ":" + std::to_string(*entry.seed);
  return entry.family + "#" + std::to_string(index);
}

namespace {

struct SweepRow {
  std::string csv;
  Report report;
};

SweepRow sweep_one(const CorpusEntry& entry, std::size_t index, const SweepOptions& options) {
  const std::string id = instance_id(entry, index);
  const GameNumbers g =
      solve_numbers(std::make_shared<const Hypergraph>(entry.graph), options.limits);
  const std::vector<BoundCheck> checks = evaluate_bounds(entry.graph, g, id);
  const StructureSummary s = structure_queries(entry.graph);

  SweepRow row;
  row.report.count_instance();
  std::ostringstream csv;
  for (const BoundCheck& c : checks) {
    if (!options.checks.empty() &&
        std::find(options.checks.begin(), options.checks.end(), c.name) == options.checks.end()) {
      continue;
    }
    row.report.add(c);
    if (!c.applicable) continue;
    csv << entry.family << ',' << entry.graph.order() << ',' << entry.graph.size() << ','
        << (entry.graph.size() > 0 ? s.uniformity.value_or(0) : 0) << ','
        << (entry.seed ? std::to_string(*entry.seed) : std::string()) << ',' << g.tau << ','
        << g.tau_g << ',' << g.tau_g_prime << ',' << c.name << ',' << c.lhs << ',' << c.rhs << ','
        << c.slack << ',' << (c.holds ? "true" : "false") << '\n';
  }
  row.csv = csv.str();
  return row;
}

}  // namespace

SweepResult experiment_sweep(const std::vector<CorpusEntry>& corpus, const std::string& descriptor,
                             const SweepOptions& options) {
  for (const std::string& name : options.checks) {
    const auto& known = bound_check_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw Error(ErrorCode::UnknownName, "unknown check '" + name + "'");
    }
  }
  std::vector<SweepRow> rows(corpus.size());
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(corpus.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) rows[i] = sweep_one(corpus[i], i, options);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
          try {
            rows[i] = sweep_one(corpus[i], i, options);
          } catch (...) {
            std::lock_guard<std::mutex> hold(failure_lock);
            if (!failure) failure = std::current_exception();
            next = corpus.size();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  SweepResult out;
  out.report = Report(descriptor);
  out.csv = std::string(kSweepCsvHeader) + "\n";
  for (SweepRow& row : rows) {
    out.csv += row.csv;
    out.report.merge(row.report);
  }
  return out;
}

}  // namespace tgame
