#include "tgame/tgame.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include <json.hpp>

#include "constructions.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "play.hpp"
#include "solver.hpp"
#include "strategies.hpp"
#include "text_format.hpp"
#include "verify.hpp"
#include "weights.hpp"

struct tg_hypergraph {
  tgame::LabeledHypergraph labeled;
  const tgame::Hypergraph& graph() const { return *labeled.graph; }
};

struct tg_game {
  tgame::GameState state;
};

struct tg_strategy {
  std::unique_ptr<tgame::Strategy> policy;
};

struct tg_corpus {
  std::vector<tgame::CorpusEntry> entries;
};

namespace {

thread_local std::string last_error;
thread_local int last_error_line = 0;

tg_status status_of(tgame::ErrorCode code) {
  using tgame::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TG_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return TG_ERR_PARSE;
    case ErrorCode::IndexOutOfRange: return TG_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::EmptyEdge: return TG_ERR_EMPTY_EDGE;
    case ErrorCode::IllegalMove: return TG_ERR_ILLEGAL_MOVE;
    case ErrorCode::LimitExceeded: return TG_ERR_LIMIT_EXCEEDED;
    case ErrorCode::NotUniform: return TG_ERR_NOT_UNIFORM;
    case ErrorCode::UnreachableCell: return TG_ERR_UNREACHABLE_CELL;
    case ErrorCode::UnknownName: return TG_ERR_UNKNOWN_NAME;
    case ErrorCode::IsolatedVertex: return TG_ERR_ISOLATED_VERTEX;
    case ErrorCode::HypothesisViolated: return TG_ERR_HYPOTHESIS_VIOLATED;
    case ErrorCode::Unsatisfiable: return TG_ERR_UNSATISFIABLE;
    case ErrorCode::NoAttachedEdgeUncovered: return TG_ERR_NO_ATTACHED_EDGE;
    case ErrorCode::Io: return TG_ERR_IO;
  }
  return TG_ERR_INTERNAL;
}

tg_status fail(tg_status status, const std::string& message) {
  last_error = message;
  last_error_line = 0;
  return status;
}

// Runs body, converting exceptions into status codes.
template <class Body>
tg_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    last_error_line = 0;
    return TG_OK;
  } catch (const tgame::ParseError& e) {
    tg_status s = fail(TG_ERR_PARSE, e.what());
    last_error_line = e.line();
    return s;
  } catch (const tgame::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TG_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw tgame::Error(tgame::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tg_hypergraph* wrap(tgame::Hypergraph h, std::string family = {}) {
  auto* out = new tg_hypergraph;
  out->labeled.graph = std::make_shared<const tgame::Hypergraph>(std::move(h));
  out->labeled.family = std::move(family);
  return out;
}

tgame::SolveLimits solve_limits(const tg_limits* limits) {
  tgame::SolveLimits out;
  if (limits) {
    out.max_edges = limits->max_edges;
    out.max_nodes = limits->max_nodes;
    out.time_budget = std::chrono::milliseconds(limits->time_budget_ms);
  }
  return out;
}

tgame::SolverOptions solver_options(const tg_limits* limits) {
  tgame::SolverOptions out;
  if (limits) {
    out.threads = limits->threads < 1 ? 1 : limits->threads;
    out.prune_dominated = limits->prune_dominated != 0;
  }
  return out;
}

tgame::PlayerRole role(tg_role r) {
  require(r == TG_EDGE_HITTER || r == TG_STALLER, "role must be TG_EDGE_HITTER or TG_STALLER");
  return r == TG_STALLER ? tgame::PlayerRole::Staller : tgame::PlayerRole::EdgeHitter;
}

std::map<std::string, int> parse_params(const char* params) {
  std::map<std::string, int> out;
  if (!params) return out;
  std::stringstream in(params);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    require(eq != std::string::npos && eq > 0, "parameters must be key=value pairs");
    try {
      std::size_t used = 0;
      const int value = std::stoi(item.substr(eq + 1), &used);
      require(used == item.size() - eq - 1, "parameter values must be integers");
      out[item.substr(0, eq)] = value;
    } catch (const std::logic_error&) {
      throw tgame::Error(tgame::ErrorCode::InvalidArgument, "bad parameter '" + item + "'");
    }
  }
  return out;
}

std::string join_warnings(const std::vector<std::string>& warnings) {
  std::string out;
  for (const std::string& w : warnings) out += w + "\n";
  return out;
}

std::string checks_json(const std::vector<tgame::BoundCheck>& checks) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json row;
    row["check"] = c.name;
    row["applicable"] = c.applicable;
    if (c.applicable) {
      row["lhs"] = c.lhs;
      row["rhs"] = c.rhs;
      row["slack"] = c.slack;
      row["holds"] = c.holds;
    }
    arr.push_back(row);
  }
  return arr.dump(2);
}

}  // namespace

extern "C" {

void tg_limits_default(tg_limits* out) {
  if (!out) return;
  const tgame::SolveLimits d;
  out->max_edges = d.max_edges;
  out->max_nodes = d.max_nodes;
  out->time_budget_ms = static_cast<uint64_t>(d.time_budget.count());
  out->threads = 1;
  out->prune_dominated = 1;
}

const char* tg_last_error(void) { return last_error.c_str(); }

int tg_last_error_line(void) { return last_error_line; }

const char* tg_status_name(tg_status status) {
  switch (status) {
    case TG_OK: return "ok";
    case TG_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case TG_ERR_PARSE: return "parse_error";
    case TG_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case TG_ERR_EMPTY_EDGE: return "empty_edge";
    case TG_ERR_ILLEGAL_MOVE: return "illegal_move";
    case TG_ERR_LIMIT_EXCEEDED: return "limit_exceeded";
    case TG_ERR_NOT_UNIFORM: return "not_uniform";
    case TG_ERR_UNREACHABLE_CELL: return "unreachable_cell";
    case TG_ERR_UNKNOWN_NAME: return "unknown_name";
    case TG_ERR_ISOLATED_VERTEX: return "isolated_vertex";
    case TG_ERR_HYPOTHESIS_VIOLATED: return "hypothesis_violated";
    case TG_ERR_UNSATISFIABLE: return "unsatisfiable";
    case TG_ERR_NO_ATTACHED_EDGE: return "no_attached_edge_uncovered";
    case TG_ERR_IO: return "io_error";
    case TG_ERR_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

void tg_string_free(char* s) { std::free(s); }

tg_status tg_hypergraph_create(int n, const int32_t* vertices, const int32_t* edge_sizes, int m,
                               tg_hypergraph** out) {
  return guarded([&] {
    require(out != nullptr && m >= 0, "bad arguments");
    require(m == 0 || (vertices && edge_sizes), "vertices and edge_sizes are required");
    std::vector<std::vector<tgame::VertexId>> edges;
    std::size_t at = 0;
    for (int e = 0; e < m; ++e) {
      require(edge_sizes[e] >= 0, "negative edge size");
      edges.emplace_back(vertices + at, vertices + at + edge_sizes[e]);
      at += static_cast<std::size_t>(edge_sizes[e]);
    }
    *out = wrap(tgame::Hypergraph::build(n, edges));
  });
}

tg_status tg_hypergraph_parse(const char* text, tg_hypergraph** out, char** warnings) {
  return guarded([&] {
    require(text && out, "text and out are required");
    tgame::ParsedHypergraph parsed = tgame::parse_hypergraph(text);
    std::unique_ptr<tg_hypergraph> h(wrap(std::move(parsed.graph)));
    if (warnings) *warnings = copy_string(join_warnings(parsed.warnings));
    *out = h.release();
  });
}

tg_status tg_hypergraph_load(const char* path, tg_hypergraph** out, char** warnings) {
  return guarded([&] {
    require(path && out, "path and out are required");
    tgame::ParsedHypergraph parsed = tgame::parse_hypergraph(tgame::read_file(path));
    std::unique_ptr<tg_hypergraph> h(wrap(std::move(parsed.graph)));
    if (warnings) *warnings = copy_string(join_warnings(parsed.warnings));
    *out = h.release();
  });
}

tg_status tg_hypergraph_emit(const tg_hypergraph* h, char** out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    *out = copy_string(tgame::emit_hypergraph(h->graph()));
  });
}

tg_status tg_hypergraph_clone(const tg_hypergraph* h, tg_hypergraph** out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    *out = new tg_hypergraph(*h);
  });
}

void tg_hypergraph_free(tg_hypergraph* h) { delete h; }

int tg_hypergraph_order(const tg_hypergraph* h) { return h ? h->graph().order() : 0; }

int tg_hypergraph_size(const tg_hypergraph* h) { return h ? h->graph().size() : 0; }

tg_status tg_hypergraph_edge(const tg_hypergraph* h, int e, int32_t* buf, int cap, int* len) {
  return guarded([&] {
    require(h && len, "h and len are required");
    if (e < 0 || e >= h->graph().size()) {
      throw tgame::Error(tgame::ErrorCode::IndexOutOfRange, "no edge " + std::to_string(e));
    }
    const tgame::Edge& edge = h->graph().edge(e);
    *len = static_cast<int>(edge.size());
    require(buf != nullptr || cap == 0, "buf is required when cap > 0");
    for (int i = 0; i < std::min(cap, *len); ++i) buf[i] = edge[static_cast<std::size_t>(i)];
  });
}

tg_status tg_hypergraph_summary_json(const tg_hypergraph* h, char** out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    const tgame::StructureSummary s = tgame::structure_queries(h->graph());
    nlohmann::ordered_json j;
    j["n"] = h->graph().order();
    j["m"] = h->graph().size();
    j["degrees"] = s.degrees;
    j["max_degree"] = s.max_degree;
    if (s.uniformity) {
      j["uniformity"] = *s.uniformity;
    } else {
      j["uniformity"] = nullptr;
    }
    j["linear"] = s.linear;
    j["components"] = s.components;
    j["removed_duplicates"] = h->graph().removed_duplicates();
    if (!h->labeled.family.empty()) j["family"] = h->labeled.family;
    if (!h->labeled.vertex_names.empty()) j["vertex_names"] = h->labeled.vertex_names;
    *out = copy_string(j.dump(2));
  });
}

tg_status tg_construct(const char* name, const char* params, const tg_hypergraph* base, tg_hypergraph** out) {
  return guarded([&] {
    require(name && out, "name and out are required");
    auto* h = new tg_hypergraph;
    std::unique_ptr<tg_hypergraph> owner(h);
    h->labeled = tgame::named_small(name, parse_params(params), base ? &base->graph() : nullptr);
    *out = owner.release();
  });
}

tg_status tg_neighborhood_hypergraph(const tg_hypergraph* g, int closed, tg_hypergraph** out) {
  return guarded([&] {
    require(g && out, "g and out are required");
    *out = wrap(tgame::neighborhood_hypergraph(
                    g->graph(), closed ? tgame::NeighborhoodMode::Closed : tgame::NeighborhoodMode::Open),
                closed ? "closed_neighborhood" : "open_neighborhood");
  });
}

tg_status tg_generate_random(int n, int m, int k, int linear, int max_degree, uint64_t seed,
                             tg_hypergraph** out) {
  return guarded([&] {
    require(out != nullptr, "out is required");
    tgame::GenSpec spec;
    spec.n = n;
    spec.m = m;
    spec.k = k;
    spec.linear = linear != 0;
    if (max_degree >= 0) spec.max_degree = max_degree;
    spec.seed = seed;
    *out = wrap(tgame::random_k_uniform(spec), "random_k" + std::to_string(k));
  });
}

tg_status tg_corpus_random(int k, int count, int n_max, int m_max, uint64_t base_seed, tg_corpus** out) {
  return guarded([&] {
    require(out != nullptr, "out is required");
    *out = new tg_corpus{tgame::random_corpus(k, count, n_max, m_max, base_seed)};
  });
}

tg_status tg_corpus_enumerate(int n_max, int m_max, int k, tg_corpus** out) {
  return guarded([&] {
    require(out != nullptr, "out is required");
    auto corpus = std::make_unique<tg_corpus>();
    const std::string family = "enum_n" + std::to_string(n_max) + "_k" + std::to_string(k);
    for (auto& h : tgame::enumerate_small(n_max, m_max, k)) {
      corpus->entries.push_back({family, std::nullopt, std::move(h)});
    }
    *out = corpus.release();
  });
}

tg_status tg_corpus_create(tg_corpus** out) {
  return guarded([&] {
    require(out != nullptr, "out is required");
    *out = new tg_corpus;
  });
}

tg_status tg_corpus_parse(const char* text, const char* family, tg_corpus** out) {
  return guarded([&] {
    require(text && out, "text and out are required");
    auto corpus = std::make_unique<tg_corpus>();
    for (auto& parsed : tgame::parse_hypergraph_stream(text)) {
      corpus->entries.push_back({family ? family : "file", std::nullopt, std::move(parsed.graph)});
    }
    *out = corpus.release();
  });
}

tg_status tg_corpus_append(tg_corpus* c, const tg_hypergraph* h, const char* family) {
  return guarded([&] {
    require(c && h, "c and h are required");
    std::string name = family ? family : h->labeled.family;
    if (name.empty()) name = "file";
    c->entries.push_back({std::move(name), std::nullopt, h->graph()});
  });
}

tg_status tg_corpus_extend(tg_corpus* c, const tg_corpus* other) {
  return guarded([&] {
    require(c && other, "both corpora are required");
    c->entries.insert(c->entries.end(), other->entries.begin(), other->entries.end());
  });
}

size_t tg_corpus_size(const tg_corpus* c) { return c ? c->entries.size() : 0; }

tg_status tg_corpus_get(const tg_corpus* c, size_t index, tg_hypergraph** out) {
  return guarded([&] {
    require(c && out, "c and out are required");
    if (index >= c->entries.size()) {
      throw tgame::Error(tgame::ErrorCode::IndexOutOfRange, "corpus index " + std::to_string(index));
    }
    *out = wrap(c->entries[index].graph, c->entries[index].family);
  });
}

tg_status tg_corpus_emit(const tg_corpus* c, char** out) {
  return guarded([&] {
    require(c && out, "c and out are required");
    std::string text;
    for (std::size_t i = 0; i < c->entries.size(); ++i) {
      text += "# " + tgame::instance_id(c->entries[i], i) + "\n";
      text += tgame::emit_hypergraph(c->entries[i].graph);
    }
    *out = copy_string(text);
  });
}

void tg_corpus_free(tg_corpus* c) { delete c; }

tg_status tg_solve(const tg_hypergraph* h, const tg_limits* limits, tg_solve_result* out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    const tgame::GameNumbers g = tgame::solve_numbers(h->labeled.graph, solve_limits(limits), solver_options(limits));
    out->tau = g.tau;
    out->tau_g = g.tau_g;
    out->tau_g_prime = g.tau_g_prime;
    out->memo_entries = g.memo_entries;
  });
}

tg_status tg_transversal_number(const tg_hypergraph* h, const tg_limits* limits, int* out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    *out = tgame::transversal_number(h->graph(), solve_limits(limits));
  });
}

tg_status tg_weight3(const tg_hypergraph* h, uint64_t covered, int64_t* out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    *out = tgame::weight3(tgame::ResidualView(h->graph(), covered));
  });
}

tg_status tg_weight4(const tg_hypergraph* h, uint64_t covered, int delta_star, int64_t* out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    *out = tgame::weight4(tgame::ResidualView(h->graph(), covered), delta_star);
  });
}

tg_status tg_bound_rhs_3a(const tg_hypergraph* h, int64_t* out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    *out = tgame::bound_rhs_3A(h->graph());
  });
}

tg_status tg_game_create(const tg_hypergraph* h, tg_role first, uint64_t precovered, tg_game** out) {
  return guarded([&] {
    require(h && out, "h and out are required");
    *out = new tg_game{tgame::GameState(h->labeled.graph, role(first), precovered)};
  });
}

void tg_game_free(tg_game* g) { delete g; }

tg_status tg_game_apply(tg_game* g, int vertex) {
  return guarded([&] {
    require(g != nullptr, "g is required");
    if (vertex < 0 || vertex >= g->state.hypergraph().order()) {
      throw tgame::Error(tgame::ErrorCode::IndexOutOfRange, "no vertex " + std::to_string(vertex));
    }
    g->state = g->state.apply(vertex);
  });
}

int tg_game_is_legal(const tg_game* g, int vertex) {
  return g && vertex >= 0 && vertex < g->state.hypergraph().order() && g->state.is_legal(vertex) ? 1 : 0;
}

int tg_game_is_terminal(const tg_game* g) { return g && g->state.is_terminal() ? 1 : 0; }

int tg_game_length(const tg_game* g) { return g ? g->state.length() : 0; }

tg_role tg_game_to_move(const tg_game* g) {
  return g && g->state.to_move() == tgame::PlayerRole::Staller ? TG_STALLER : TG_EDGE_HITTER;
}

uint64_t tg_game_uncovered(const tg_game* g) { return g ? g->state.uncovered() : 0; }

tg_status tg_game_legal_moves(const tg_game* g, int32_t* buf, int cap, int* len) {
  return guarded([&] {
    require(g && len, "g and len are required");
    const std::vector<tgame::VertexId> moves = tgame::legal_moves(g->state);
    *len = static_cast<int>(moves.size());
    require(buf != nullptr || cap == 0, "buf is required when cap > 0");
    for (int i = 0; i < std::min(cap, *len); ++i) buf[i] = moves[static_cast<std::size_t>(i)];
  });
}

tg_status tg_game_value(const tg_game* g, const tg_limits* limits, int* out) {
  return guarded([&] {
    require(g && out, "g and out are required");
    *out = tgame::game_value(g->state, solve_limits(limits), solver_options(limits));
  });
}

tg_status tg_game_best_move(const tg_game* g, const tg_limits* limits, int* out) {
  return guarded([&] {
    require(g && out, "g and out are required");
    *out = tgame::best_move(g->state, solve_limits(limits), solver_options(limits));
  });
}

tg_status tg_game_transcript(const tg_game* g, char** jsonl) {
  return guarded([&] {
    require(g && jsonl, "g and jsonl are required");
    *jsonl = copy_string(tgame::transcript_of(g->state).to_jsonl());
  });
}

tg_status tg_strategy_create(const char* spec, const tg_hypergraph* labeled, const tg_limits* limits,
                             tg_strategy** out) {
  return guarded([&] {
    require(spec && out, "spec and out are required");
    std::optional<tgame::CoronaLabels> labels;
    if (labeled) labels = labeled->labeled.labels;
    *out = new tg_strategy{tgame::make_strategy(spec, labels, solve_limits(limits))};
  });
}

void tg_strategy_free(tg_strategy* s) { delete s; }

tg_status tg_strategy_choose(tg_strategy* s, const tg_game* g, int* vertex, char** rule) {
  return guarded([&] {
    require(s && g && vertex, "s, g and vertex are required");
    const tgame::Decision d = s->policy->choose(g->state);
    *vertex = d.vertex;
    if (rule) *rule = copy_string(d.rule);
  });
}

tg_status tg_play_match(const tg_hypergraph* h, const tg_strategy* edge_hitter, const tg_strategy* staller,
                        tg_role first, int scheme, int* length, char** transcript_jsonl) {
  return guarded([&] {
    require(h && edge_hitter && staller, "h and both strategies are required");
    require(scheme == 0 || scheme == 3 || scheme == 4, "scheme must be 0, 3 or 4");
    std::optional<tgame::WeightScheme> ws;
    if (scheme != 0) ws = static_cast<tgame::WeightScheme>(scheme);
    const tgame::MatchResult r =
        tgame::play_match(h->labeled.graph, *edge_hitter->policy, *staller->policy, role(first), ws);
    if (length) *length = r.transcript.length();
    if (transcript_jsonl) *transcript_jsonl = copy_string(r.transcript.to_jsonl());
  });
}

tg_status tg_evaluate_strategy(const tg_game* start, const tg_strategy* fixed, tg_role fixed_role,
                               const tg_limits* limits, int* length, char** witness_jsonl) {
  return guarded([&] {
    require(start && fixed, "start and fixed are required");
    const tgame::StrategyEvaluation r =
        tgame::evaluate_strategy(start->state, *fixed->policy, role(fixed_role), solve_limits(limits));
    if (length) *length = r.length;
    if (witness_jsonl) *witness_jsonl = copy_string(r.witness.to_jsonl());
  });
}

tg_status tg_worst_case(const tg_hypergraph* h, const tg_strategy* edge_hitter, tg_role first,
                        const tg_limits* limits, int* length, char** witness_jsonl) {
  return guarded([&] {
    require(h && edge_hitter, "h and edge_hitter are required");
    const tgame::StrategyEvaluation r = tgame::worst_case_vs_strategy(h->labeled.graph, *edge_hitter->policy,
                                                                      role(first), solve_limits(limits));
    if (length) *length = r.length;
    if (witness_jsonl) *witness_jsonl = copy_string(r.witness.to_jsonl());
  });
}

tg_status tg_check_bounds(const tg_hypergraph* h, const tg_limits* limits, char** json, int* ok) {
  return guarded([&] {
    require(h != nullptr, "h is required");
    const auto checks = tgame::check_bounds(h->graph(), "input", solve_limits(limits), solver_options(limits));
    bool all = true;
    for (const auto& c : checks) all = all && c.holds;
    if (json) *json = copy_string(checks_json(checks));
    if (ok) *ok = all ? 1 : 0;
  });
}

tg_status tg_check_continuation(const tg_hypergraph* h, int trials, uint64_t seed, const tg_limits* limits,
                                char** json, int* ok) {
  return guarded([&] {
    require(h != nullptr && trials >= 0, "h is required and trials must be non-negative");
    const tgame::Report r = tgame::check_continuation(h->graph(), trials, seed, "input", solve_limits(limits));
    if (json) *json = copy_string(r.to_json());
    if (ok) *ok = r.ok() ? 1 : 0;
  });
}

tg_status tg_check_corona(const tg_hypergraph* base, int k, int pendant_size, const tg_limits* limits,
                          char** json, int* ok) {
  return guarded([&] {
    require(base != nullptr, "base is required");
    const tgame::CoronaReport r = tgame::check_corona(base->graph(), k, pendant_size, solve_limits(limits));
    if (json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.report.to_json());
      j["tau"] = r.numbers.tau;
      j["tau_g"] = r.numbers.tau_g;
      j["tau_g_prime"] = r.numbers.tau_g_prime;
      j["rule_length_edge_hitter_start"] = r.rule_length_edge_hitter_start;
      j["rule_length_staller_start"] = r.rule_length_staller_start;
      *json = copy_string(j.dump(2));
    }
    if (ok) *ok = r.report.ok() ? 1 : 0;
  });
}

tg_status tg_sweep(const tg_corpus* c, const char* descriptor, const char* checks, const tg_limits* limits,
                   char** csv, char** report_json, int* ok) {
  return guarded([&] {
    require(c != nullptr, "c is required");
    tgame::SweepOptions options;
    options.limits = solve_limits(limits);
    options.threads = solver_options(limits).threads;
    if (checks) {
      std::stringstream in(checks);
      std::string name;
      while (std::getline(in, name, ',')) {
        if (!name.empty()) options.checks.push_back(name);
      }
    }
    const tgame::SweepResult r = tgame::experiment_sweep(c->entries, descriptor ? descriptor : "", options);
    char* csv_copy = csv ? copy_string(r.csv) : nullptr;
    if (report_json) {
      try {
        *report_json = copy_string(r.report.to_json());
      } catch (...) {
        std::free(csv_copy);
        throw;
      }
    }
    if (csv) *csv = csv_copy;
    if (ok) *ok = r.report.ok() ? 1 : 0;
  });
}

tg_status tg_play_session(const tg_hypergraph* h, tg_role human, tg_role first, const char* engine,
                          const tg_limits* limits, tg_read_fn read, tg_write_fn write, void* user,
                          int* aborted, char** transcript_jsonl) {
  return guarded([&] {
    require(h && engine && read && write, "h, engine, read and write are required");
    tgame::PlayOptions options;
    options.human = role(human);
    options.first = role(first);
    options.engine = engine;
    options.limits = solve_limits(limits);
    const tgame::PlayOutcome r = tgame::play_session(
        h->labeled.graph, options,
        [&]() -> std::optional<std::string> {
          const char* line = read(user);
          if (!line) return std::nullopt;
          return std::string(line);
        },
        [&](std::string_view text) { write(user, text.data(), text.size()); });
    if (aborted) *aborted = r.aborted ? 1 : 0;
    if (transcript_jsonl) *transcript_jsonl = copy_string(r.transcript.to_jsonl());
  });
}

}  // extern "C"
