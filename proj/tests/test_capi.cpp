#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "tgame/tgame.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tg_string_free(s);
  return out;
}

tg_hypergraph* parse(const char* text) {
  tg_hypergraph* h = nullptr;
  REQUIRE(tg_hypergraph_parse(text, &h, nullptr) == TG_OK);
  return h;
}

}  // namespace

TEST_CASE("hypergraphs through the C interface") {
  const int32_t vertices[] = {0, 1, 1, 2, 2, 3, 3, 0};
  const int32_t sizes[] = {2, 2, 2, 2};
  tg_hypergraph* h = nullptr;
  REQUIRE(tg_hypergraph_create(4, vertices, sizes, 4, &h) == TG_OK);
  CHECK(tg_hypergraph_order(h) == 4);
  CHECK(tg_hypergraph_size(h) == 4);
  int32_t buf[4];
  int len = 0;
  REQUIRE(tg_hypergraph_edge(h, 3, buf, 4, &len) == TG_OK);
  CHECK(len == 2);
  CHECK(buf[0] == 0);
  CHECK(buf[1] == 3);
  CHECK(tg_hypergraph_edge(h, 9, buf, 4, &len) == TG_ERR_INDEX_OUT_OF_RANGE);

  char* text = nullptr;
  REQUIRE(tg_hypergraph_emit(h, &text) == TG_OK);
  CHECK(take(text) == "4 4\n0 1\n1 2\n2 3\n0 3\n");

  char* summary = nullptr;
  REQUIRE(tg_hypergraph_summary_json(h, &summary) == TG_OK);
  const auto j = nlohmann::json::parse(take(summary));
  CHECK(j["max_degree"] == 2);
  tg_hypergraph_free(h);
}

TEST_CASE("C interface errors carry a status and message") {
  tg_hypergraph* h = nullptr;
  CHECK(tg_hypergraph_parse("3 1\n0 x\n", &h, nullptr) == TG_ERR_PARSE);
  CHECK(h == nullptr);
  CHECK(tg_last_error_line() == 2);
  CHECK(std::string(tg_last_error()).find("line 2") != std::string::npos);
  CHECK(tg_hypergraph_parse("3 1\n0 5\n", &h, nullptr) == TG_ERR_INDEX_OUT_OF_RANGE);
  CHECK(tg_construct("nothing", nullptr, nullptr, &h) == TG_ERR_UNKNOWN_NAME);
  CHECK(tg_hypergraph_parse(nullptr, &h, nullptr) == TG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(tg_status_name(TG_ERR_LIMIT_EXCEEDED)) == "limit_exceeded");
}

TEST_CASE("solving and playing through the C interface") {
  tg_hypergraph* f = nullptr;
  REQUIRE(tg_construct("figure2", nullptr, nullptr, &f) == TG_OK);
  tg_solve_result r{};
  REQUIRE(tg_solve(f, nullptr, &r) == TG_OK);
  CHECK(r.tau == 2);
  CHECK(r.tau_g == 3);

  int64_t w = 0;
  REQUIRE(tg_weight3(f, 0, &w) == TG_OK);
  CHECK(w == 144);

  tg_game* g = nullptr;
  REQUIRE(tg_game_create(f, TG_EDGE_HITTER, 0, &g) == TG_OK);
  int best = -1;
  REQUIRE(tg_game_best_move(g, nullptr, &best) == TG_OK);
  CHECK(tg_game_is_legal(g, best));
  REQUIRE(tg_game_apply(g, best) == TG_OK);
  CHECK(tg_game_apply(g, best) == TG_ERR_ILLEGAL_MOVE);
  CHECK(tg_game_to_move(g) == TG_STALLER);
  int value = 0;
  REQUIRE(tg_game_value(g, nullptr, &value) == TG_OK);
  CHECK(value == 2);

  tg_strategy* eh = nullptr;
  REQUIRE(tg_strategy_create("eh3", nullptr, nullptr, &eh) == TG_OK);
  int length = 0;
  char* witness = nullptr;
  REQUIRE(tg_worst_case(f, eh, TG_EDGE_HITTER, nullptr, &length, &witness) == TG_OK);
  CHECK(length == 3);
  CHECK(take(witness).find("\"summary\"") != std::string::npos);

  tg_limits limits;
  tg_limits_default(&limits);
  limits.max_edges = 2;
  CHECK(tg_solve(f, &limits, &r) == TG_ERR_LIMIT_EXCEEDED);

  tg_strategy_free(eh);
  tg_game_free(g);
  tg_hypergraph_free(f);
}

TEST_CASE("verification through the C interface") {
  tg_hypergraph* h = nullptr;
  REQUIRE(tg_construct("Hk", "k=1", nullptr, &h) == TG_OK);
  char* json = nullptr;
  int ok = 0;
  REQUIRE(tg_check_bounds(h, nullptr, &json, &ok) == TG_OK);
  CHECK(ok == 1);
  CHECK(take(json).find("thm1_4_11") != std::string::npos);

  tg_corpus* c = nullptr;
  REQUIRE(tg_corpus_create(&c) == TG_OK);
  REQUIRE(tg_corpus_append(c, h, "H1") == TG_OK);
  CHECK(tg_corpus_size(c) == 1);
  char* csv = nullptr;
  char* report = nullptr;
  REQUIRE(tg_sweep(c, "one", "thm1_4_11", nullptr, &csv, &report, &ok) == TG_OK);
  CHECK(ok == 1);
  CHECK(take(csv).find("H1,6,5,0,,3,4,3,thm1_4_11,44,44,0,true") != std::string::npos);
  take(report);
  tg_corpus_free(c);

  tg_hypergraph* edge = parse("3 1\n0 1 2\n");
  REQUIRE(tg_check_corona(edge, 3, 2, nullptr, &json, &ok) == TG_OK);
  CHECK(ok == 1);
  take(json);
  tg_hypergraph_free(edge);
  tg_hypergraph_free(h);
}

TEST_CASE("corpora through the C interface") {
  tg_corpus* c = nullptr;
  REQUIRE(tg_corpus_enumerate(4, 2, 3, &c) == TG_OK);
  CHECK(tg_corpus_size(c) == 10);
  tg_corpus* parsed = nullptr;
  char* text = nullptr;
  REQUIRE(tg_corpus_emit(c, &text) == TG_OK);
  const std::string all = take(text);
  REQUIRE(tg_corpus_parse(all.c_str(), "copy", &parsed) == TG_OK);
  CHECK(tg_corpus_size(parsed) == 10);
  tg_hypergraph* h = nullptr;
  CHECK(tg_corpus_get(parsed, 10, &h) == TG_ERR_INDEX_OUT_OF_RANGE);
  tg_corpus_free(parsed);
  tg_corpus_free(c);
}

TEST_CASE("an interactive session through callbacks") {
  struct Io {
    std::vector<std::string> in{"0", "1", "2", "3"};
    std::size_t next = 0;
    std::string out;
  } io;
  tg_hypergraph* c4 = nullptr;
  REQUIRE(tg_construct("C4", nullptr, nullptr, &c4) == TG_OK);
  int aborted = -1;
  char* transcript = nullptr;
  REQUIRE(tg_play_session(
              c4, TG_EDGE_HITTER, TG_EDGE_HITTER, "greedy", nullptr,
              [](void* u) -> const char* {
                auto* s = static_cast<Io*>(u);
                return s->next < s->in.size() ? s->in[s->next++].c_str() : nullptr;
              },
              [](void* u, const char* text, size_t len) { static_cast<Io*>(u)->out.append(text, len); }, &io,
              &aborted, &transcript) == TG_OK);
  CHECK(aborted == 0);
  CHECK(take(transcript).find("\"header\"") != std::string::npos);
  CHECK(io.out.find("game over") != std::string::npos);
  tg_hypergraph_free(c4);
}
