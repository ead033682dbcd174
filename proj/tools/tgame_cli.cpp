// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgame/tgame.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitViolation = 4;

// Thrown to unwind with a status from the library.
struct Failure {
  tg_status status;
  std::string message;
};

void check(tg_status s) {
  if (s != TG_OK) throw Failure{s, tg_last_error()};
}

int exit_code_for(tg_status s) {
  switch (s) {
    case TG_ERR_PARSE:
    case TG_ERR_INDEX_OUT_OF_RANGE:
    case TG_ERR_EMPTY_EDGE:
      return kExitParse;
    case TG_ERR_LIMIT_EXCEEDED:
      return kExitLimit;
    default:
      return kExitOther;
  }
}

struct HypergraphDeleter {
  void operator()(tg_hypergraph* h) const { tg_hypergraph_free(h); }
};
struct GameDeleter {
  void operator()(tg_game* g) const { tg_game_free(g); }
};
struct StrategyDeleter {
  void operator()(tg_strategy* s) const { tg_strategy_free(s); }
};
struct CorpusDeleter {
  void operator()(tg_corpus* c) const { tg_corpus_free(c); }
};
using Hypergraph = std::unique_ptr<tg_hypergraph, HypergraphDeleter>;
using Game = std::unique_ptr<tg_game, GameDeleter>;
using Strategy = std::unique_ptr<tg_strategy, StrategyDeleter>;
using Corpus = std::unique_ptr<tg_corpus, CorpusDeleter>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  tg_string_free(s);
  return out;
}

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{TG_ERR_IO, "cannot write '" + path + "'"};
  out << text;
}

// Limits: built-in defaults, then the TGAME_LIMITS environment variable,
// then --limits-file, then individual flags.
struct LimitFlags {
  std::string file;
  std::optional<int> max_edges;
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::uint64_t> time_ms;
  std::optional<int> threads;
  bool no_prune = false;

  void attach(CLI::App* app) {
    app->add_option("--limits-file", file, "key=value limits, one per line or comma separated");
    app->add_option("--max-edges", max_edges, "largest edge count for an exact solve");
    app->add_option("--max-nodes", max_nodes, "search node budget (0: unlimited)");
    app->add_option("--time-budget-ms", time_ms, "wall-clock budget per solve (0: unlimited)");
    app->add_option("--threads", threads, "worker threads");
    app->add_flag("--no-prune", no_prune, "disable dominated-move pruning");
  }

  static void apply_pairs(tg_limits& l, const std::string& text, const std::string& origin) {
    std::string normalized = text;
    for (char& c : normalized) {
      if (c == '\n' || c == ';') c = ',';
    }
    std::stringstream in(normalized);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto a = item.find_first_not_of(" \t\r");
      if (a == std::string::npos || item[a] == '#') continue;
      item = item.substr(a, item.find_last_not_of(" \t\r") - a + 1);
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Failure{TG_ERR_INVALID_ARGUMENT, origin + ": expected key=value, got '" + item + "'"};
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      try {
        if (key == "max_edges") {
          l.max_edges = std::stoi(value);
        } else if (key == "max_nodes") {
          l.max_nodes = std::stoull(value);
        } else if (key == "time_budget_ms") {
          l.time_budget_ms = std::stoull(value);
        } else if (key == "threads") {
          l.threads = std::stoi(value);
        } else if (key == "prune_dominated") {
          l.prune_dominated = std::stoi(value);
        } else {
          throw Failure{TG_ERR_INVALID_ARGUMENT, origin + ": unknown limit '" + key + "'"};
        }
      } catch (const std::logic_error&) {
        throw Failure{TG_ERR_INVALID_ARGUMENT, origin + ": bad value for '" + key + "'"};
      }
    }
  }

  tg_limits resolve() const {
    tg_limits l;
    tg_limits_default(&l);
    if (const char* env = std::getenv("TGAME_LIMITS")) apply_pairs(l, env, "TGAME_LIMITS");
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Failure{TG_ERR_IO, "cannot open limits file '" + file + "'"};
      apply_pairs(l, slurp(in), file);
    }
    if (max_edges) l.max_edges = *max_edges;
    if (max_nodes) l.max_nodes = *max_nodes;
    if (time_ms) l.time_budget_ms = *time_ms;
    if (threads) l.threads = *threads;
    if (no_prune) l.prune_dominated = 0;
    return l;
  }
};

// Where an instance comes from: a file (or - for stdin), or a named
// construction.
struct InstanceFlags {
  std::string path;
  std::string construct;
  std::vector<std::string> params;
  std::string base;

  void attach(CLI::App* app, bool allow_stdin = true) {
    app->add_option("file", path, allow_stdin ? "hypergraph file, - for stdin" : "hypergraph file");
    app->add_option("--construct", construct, "named construction instead of a file");
    app->add_option("--param", params, "construction parameter key=value")->take_all();
    app->add_option("--base", base, "base hypergraph file for corona");
  }

  static Hypergraph load(const std::string& path) {
    tg_hypergraph* h = nullptr;
    char* warnings = nullptr;
    if (path == "-") {
      const std::string text = slurp(std::cin);
      check(tg_hypergraph_parse(text.c_str(), &h, &warnings));
    } else {
      check(tg_hypergraph_load(path.c_str(), &h, &warnings));
    }
    Hypergraph out(h);
    const std::string w = take(warnings);
    if (!w.empty()) std::cerr << "warning: " << w;
    return out;
  }

  Hypergraph resolve() const {
    if (!construct.empty()) {
      Hypergraph base_graph;
      if (!base.empty()) base_graph = load(base);
      std::string joined;
      for (const std::string& p : params) joined += (joined.empty() ? "" : ",") + p;
      tg_hypergraph* h = nullptr;
      check(tg_construct(construct.c_str(), joined.c_str(), base_graph.get(), &h));
      return Hypergraph(h);
    }
    if (path.empty()) throw Failure{TG_ERR_INVALID_ARGUMENT, "give a hypergraph file or --construct"};
    return load(path);
  }
};

tg_role parse_role(const std::string& s) {
  if (s == "edgehitter" || s == "edge-hitter" || s == "eh") return TG_EDGE_HITTER;
  if (s == "staller" || s == "st") return TG_STALLER;
  throw Failure{TG_ERR_INVALID_ARGUMENT, "role must be edgehitter or staller, got '" + s + "'"};
}

int run_solve(const InstanceFlags& in, const LimitFlags& lf, bool staller_start, bool json,
              const std::string& transcript) {
  const Hypergraph h = in.resolve();
  const tg_limits limits = lf.resolve();
  tg_solve_result r{};
  check(tg_solve(h.get(), &limits, &r));
  const tg_role first = staller_start ? TG_STALLER : TG_EDGE_HITTER;
  const int value = staller_start ? r.tau_g_prime : r.tau_g;

  tg_game* raw = nullptr;
  check(tg_game_create(h.get(), first, 0, &raw));
  const Game game(raw);
  std::optional<int> best;
  if (!tg_game_is_terminal(game.get())) {
    int v = -1;
    check(tg_game_best_move(game.get(), &limits, &v));
    best = v;
  }

  if (!transcript.empty()) {
    tg_strategy* eh = nullptr;
    tg_strategy* st = nullptr;
    check(tg_strategy_create("exact", nullptr, &limits, &eh));
    const Strategy eh_owner(eh);
    check(tg_strategy_create("exact", nullptr, &limits, &st));
    const Strategy st_owner(st);
    char* jsonl = nullptr;
    check(tg_play_match(h.get(), eh, st, first, 0, nullptr, &jsonl));
    write_text(transcript, take(jsonl));
  }

  const bool diff_ok = std::abs(r.tau_g - r.tau_g_prime) <= 1;
  if (json) {
    std::cout << "{\"n\": " << tg_hypergraph_order(h.get()) << ", \"m\": " << tg_hypergraph_size(h.get())
              << ", \"tau\": " << r.tau << ", \"tau_g\": " << r.tau_g << ", \"tau_g_prime\": " << r.tau_g_prime
              << ", \"first\": \"" << (staller_start ? "staller" : "edgehitter") << "\", \"best_move\": "
              << (best ? std::to_string(*best) : "null") << ", \"memo_entries\": " << r.memo_entries
              << "}\n";
  } else {
    std::cout << "tau=" << r.tau << (staller_start ? " tau_g_prime=" : " tau_g=") << value << "\n";
    std::cout << "best_move=" << (best ? std::to_string(*best) : "none") << "\n";
    if (staller_start) std::cout << "tau_g=" << r.tau_g << " |tau_g-tau_g_prime|<=1 " << (diff_ok ? "holds" : "VIOLATED") << "\n";
  }
  return diff_ok ? kExitOk : kExitViolation;
}

int run_verify(const InstanceFlags& in, const LimitFlags& lf, int continuation, std::uint64_t seed,
               std::optional<int> corona_k, int pendant, bool json) {
  const Hypergraph h = in.resolve();
  const tg_limits limits = lf.resolve();
  int ok = 0;
  char* out = nullptr;
  if (corona_k) {
    check(tg_check_corona(h.get(), *corona_k, pendant, &limits, &out, &ok));
    std::cout << take(out) << "\n";
    return ok ? kExitOk : kExitViolation;
  }
  check(tg_check_bounds(h.get(), &limits, &out, &ok));
  const std::string report = take(out);
  if (json) {
    std::cout << report << "\n";
  } else {
    for (const auto& row : nlohmann::json::parse(report)) {
      const std::string name = row["check"];
      if (!row["applicable"].get<bool>()) {
        std::cout << name << ": not applicable\n";
        continue;
      }
      std::cout << name << ": " << row["lhs"] << " <= " << row["rhs"] << " slack " << row["slack"]
                << (row["holds"].get<bool>() ? " ok" : " VIOLATED") << "\n";
    }
  }
  int status = ok ? kExitOk : kExitViolation;
  if (continuation > 0) {
    int cont_ok = 0;
    check(tg_check_continuation(h.get(), continuation, seed, &limits, &out, &cont_ok));
    std::cout << take(out) << "\n";
    if (!cont_ok) status = kExitViolation;
  }
  return status;
}

int run_construct(const InstanceFlags& in, bool summary, const std::string& output) {
  const Hypergraph h = in.resolve();
  char* text = nullptr;
  check(tg_hypergraph_emit(h.get(), &text));
  write_text(output, take(text));
  if (summary) {
    char* s = nullptr;
    check(tg_hypergraph_summary_json(h.get(), &s));
    std::cerr << take(s) << "\n";
  }
  return kExitOk;
}

int run_play(const InstanceFlags& in, const LimitFlags& lf, const std::string& human, const std::string& engine,
             bool staller_start, const std::string& transcript) {
  if (in.path == "-") throw Failure{TG_ERR_INVALID_ARGUMENT, "play reads moves from stdin; give the hypergraph as a file"};
  const Hypergraph h = in.resolve();
  const tg_limits limits = lf.resolve();
  struct Io {
    std::string line;
  } io;
  auto read = [](void* user) -> const char* {
    auto* self = static_cast<Io*>(user);
    if (!std::getline(std::cin, self->line)) return nullptr;
    return self->line.c_str();
  };
  auto write = [](void*, const char* text, size_t len) {
    std::cout.write(text, static_cast<std::streamsize>(len));
    std::cout.flush();
  };
  int aborted = 0;
  char* jsonl = nullptr;
  check(tg_play_session(h.get(), parse_role(human), staller_start ? TG_STALLER : TG_EDGE_HITTER, engine.c_str(),
                        &limits, read, write, &io, &aborted, &jsonl));
  const std::string t = take(jsonl);
  if (!transcript.empty()) write_text(transcript, t);
  return aborted ? kExitOther : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transversal game on hypergraphs: exact values, strategies and bound checks"};
  app.require_subcommand(1);

  InstanceFlags solve_in, verify_in, construct_in, play_in;
  LimitFlags solve_limits, verify_limits, play_limits, sweep_limits;

  auto* solve = app.add_subcommand("solve", "tau, tau_g or tau_g' and an optimal first move");
  solve_in.attach(solve);
  solve_limits.attach(solve);
  bool staller_start = false, json = false;
  std::string transcript;
  solve->add_flag("--staller-start", staller_start, "Staller moves first");
  solve->add_flag("--json", json, "machine-readable output");
  solve->add_option("--transcript", transcript, "write an optimal line of play as JSONL");

  auto* verify = app.add_subcommand("verify", "check every applicable bound on one instance");
  verify_in.attach(verify);
  verify_limits.attach(verify);
  int continuation = 0;
  std::uint64_t verify_seed = 1;
  std::optional<int> corona_k;
  int pendant = 2;
  bool verify_json = false;
  verify->add_option("--continuation", continuation, "also sample this many nested covered-edge pairs");
  verify->add_option("--seed", verify_seed, "seed for --continuation");
  verify->add_option("--corona", corona_k, "treat the input as a corona base with this k");
  verify->add_option("--pendant", pendant, "pendant edge size for --corona");
  verify->add_flag("--json", verify_json, "print the check list as JSON");

  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  auto* gen_random = gen->add_subcommand("random", "one random k-uniform hypergraph");
  int gn = 0, gm = 0, gk = 3, max_degree = -1;
  bool linear = false;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-";
  gen_random->add_option("--n", gn, "vertices")->required();
  gen_random->add_option("--m", gm, "edges")->required();
  gen_random->add_option("--k", gk, "edge size");
  gen_random->add_option("--seed", gen_seed, "generator seed")->required();
  gen_random->add_flag("--linear", linear, "no two edges share two vertices");
  gen_random->add_option("--max-degree", max_degree, "degree cap");
  gen_random->add_option("-o,--output", gen_out, "output file");
  auto* gen_enum = gen->add_subcommand("enumerate", "all k-uniform hypergraphs on n vertices with 1..m edges");
  int en = 0, em = 0, ek = 3;
  gen_enum->add_option("--n", en, "vertices")->required();
  gen_enum->add_option("--m", em, "maximum edges")->required();
  gen_enum->add_option("--k", ek, "edge size");
  gen_enum->add_option("-o,--output", gen_out, "output file");
  std::string split_dir;
  gen_enum->add_option("--split", split_dir, "write one file per instance into this directory");
  auto* gen_corpus = gen->add_subcommand("corpus", "seeded random corpus");
  int ck = 3, count = 10, n_max = 10, m_max = 10;
  std::uint64_t base_seed = 1;
  gen_corpus->add_option("--k", ck, "edge size");
  gen_corpus->add_option("--count", count, "instances");
  gen_corpus->add_option("--n-max", n_max, "largest vertex count");
  gen_corpus->add_option("--m-max", m_max, "largest edge count");
  gen_corpus->add_option("--seed", base_seed, "seed of the first instance");
  gen_corpus->add_option("-o,--output", gen_out, "output file");
  gen_corpus->add_option("--split", split_dir, "write one file per instance into this directory");

  auto* construct = app.add_subcommand("construct", "emit a named construction");
  construct->add_option("name,--family", construct_in.construct, "C4, figure2, complete, isolated_edges, cycle, Hk, corona")
      ->required();
  construct->add_option("--param,--params", construct_in.params, "parameter key=value")->take_all();
  construct->add_option("--base", construct_in.base, "base hypergraph file for corona");
  bool summary = false;
  std::string construct_out = "-";
  construct->add_flag("--summary", summary, "print a structure summary to stderr");
  construct->add_option("-o,--output", construct_out, "output file");

  auto* play = app.add_subcommand("play", "play against an engine in the terminal");
  play_in.attach(play, false);
  play_limits.attach(play);
  std::string human = "edgehitter", engine = "exact", play_transcript;
  bool play_staller_start = false;
  play->add_option("--human", human, "edgehitter or staller");
  play->add_option("--engine", engine, "exact, eh3, eh4, greedy or random:SEED");
  play->add_flag("--staller-start", play_staller_start, "Staller moves first");
  play->add_option("--transcript", play_transcript, "write the transcript as JSONL");

  auto* sweep = app.add_subcommand("sweep", "check bounds over a corpus and write CSV");
  sweep_limits.attach(sweep);
  std::vector<int> enumerate_spec, graphs_spec;
  std::vector<std::uint64_t> random_spec;
  std::vector<std::string> inputs;
  std::string checks, csv_out = "-", report_out;
  sweep->add_option("--enumerate", enumerate_spec, "N M K: enumerate k-uniform instances")->expected(3);
  sweep->add_option("--graphs", graphs_spec, "N: all simple graphs on N vertices")->expected(1);
  sweep->add_option("--random", random_spec, "K COUNT NMAX MMAX SEED: random corpus")->expected(5);
  sweep->add_option("--input", inputs, "file with instances back to back");
  sweep->add_option("--checks", checks, "comma-separated check names (default all)");
  sweep->add_option("--csv", csv_out, "CSV output file");
  sweep->add_option("--report", report_out, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitOther;
  }

  try {
    if (*solve) return run_solve(solve_in, solve_limits, staller_start, json, transcript);
    if (*verify) {
      return run_verify(verify_in, verify_limits, continuation, verify_seed, corona_k, pendant, verify_json);
    }
    if (*construct) return run_construct(construct_in, summary, construct_out);
    if (*play) return run_play(play_in, play_limits, human, engine, play_staller_start, play_transcript);
    if (*gen_random) {
      tg_hypergraph* h = nullptr;
      check(tg_generate_random(gn, gm, gk, linear ? 1 : 0, max_degree, gen_seed, &h));
      const Hypergraph owner(h);
      char* text = nullptr;
      check(tg_hypergraph_emit(h, &text));
      write_text(gen_out, take(text));
      return kExitOk;
    }
    if (*gen_enum || *gen_corpus) {
      tg_corpus* c = nullptr;
      if (*gen_enum) {
        check(tg_corpus_enumerate(en, em, ek, &c));
      } else {
        check(tg_corpus_random(ck, count, n_max, m_max, base_seed, &c));
      }
      const Corpus owner(c);
      if (!split_dir.empty()) {
        for (size_t i = 0; i < tg_corpus_size(c); ++i) {
          tg_hypergraph* h = nullptr;
          check(tg_corpus_get(c, i, &h));
          const Hypergraph item(h);
          char* text = nullptr;
          check(tg_hypergraph_emit(h, &text));
          char name[32];
          std::snprintf(name, sizeof name, "/instance_%05zu.txt", i);
          write_text(split_dir + name, take(text));
        }
        return kExitOk;
      }
      char* text = nullptr;
      check(tg_corpus_emit(c, &text));
      write_text(gen_out, take(text));
      return kExitOk;
    }
    if (*sweep) {
      const tg_limits limits = sweep_limits.resolve();
      tg_corpus* raw = nullptr;
      check(tg_corpus_create(&raw));
      const Corpus corpus(raw);
      std::string descriptor;
      auto add = [&](tg_corpus* part, const std::string& what) {
        const Corpus owner(part);
        check(tg_corpus_extend(corpus.get(), part));
        descriptor += (descriptor.empty() ? "" : "+") + what;
      };
      if (!enumerate_spec.empty()) {
        tg_corpus* part = nullptr;
        check(tg_corpus_enumerate(enumerate_spec[0], enumerate_spec[1], enumerate_spec[2], &part));
        add(part, "enumerate(" + std::to_string(enumerate_spec[0]) + "," + std::to_string(enumerate_spec[1]) +
                      "," + std::to_string(enumerate_spec[2]) + ")");
      }
      if (!graphs_spec.empty()) {
        const int n = graphs_spec[0];
        tg_corpus* part = nullptr;
        check(tg_corpus_enumerate(n, n * (n - 1) / 2, 2, &part));
        add(part, "graphs(" + std::to_string(n) + ")");
      }
      if (!random_spec.empty()) {
        tg_corpus* part = nullptr;
        check(tg_corpus_random(static_cast<int>(random_spec[0]), static_cast<int>(random_spec[1]),
                               static_cast<int>(random_spec[2]), static_cast<int>(random_spec[3]), random_spec[4],
                               &part));
        add(part, "random(k=" + std::to_string(random_spec[0]) + ",count=" + std::to_string(random_spec[1]) + ")");
      }
      for (const std::string& path : inputs) {
        std::ifstream in(path);
        if (!in) throw Failure{TG_ERR_IO, "cannot open '" + path + "'"};
        tg_corpus* part = nullptr;
        check(tg_corpus_parse(slurp(in).c_str(), path.c_str(), &part));
        const Corpus owner(part);
        check(tg_corpus_extend(corpus.get(), part));
        descriptor += (descriptor.empty() ? "" : "+") + path;
      }
      char* csv = nullptr;
      char* report = nullptr;
      int ok = 0;
      check(tg_sweep(corpus.get(), descriptor.c_str(), checks.empty() ? nullptr : checks.c_str(), &limits, &csv,
                     &report, &ok));
      write_text(csv_out, take(csv));
      const std::string report_text = take(report);
      if (!report_out.empty()) write_text(report_out, report_text + "\n");
      std::cerr << "instances: " << tg_corpus_size(corpus.get()) << (ok ? ", no violations" : ", VIOLATIONS found")
                << "\n";
      return ok ? kExitOk : kExitViolation;
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << tg_status_name(f.status) << "): " << f.message << "\n";
    return exit_code_for(f.status);
  }
  return kExitOther;
}
