#include <doctest.h>

#include "constructions.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "text_format.hpp"

using namespace tgame;

TEST_CASE("parse C4 with comments and blank lines") {
  const ParsedHypergraph p = parse_hypergraph("# the 4-cycle\n4 4\n\n0 1\n1 2\n  # middle\n2 3\n3 0\n");
  CHECK(p.graph == cycle4());
  CHECK(p.warnings.empty());
}

TEST_CASE("duplicate edges are removed with a warning") {
  const ParsedHypergraph p = parse_hypergraph("3 2\n0 1 2\n2 1 0\n");
  CHECK(p.graph.size() == 1);
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("duplicates removed") != std::string::npos);
}

TEST_CASE("out-of-range vertex ids") {
  try {
    (void)parse_hypergraph("3 1\n0 5\n");
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("malformed text reports its line") {
  const std::vector<std::pair<std::string, int>> cases{
      {"", 1}, {"3\n", 1}, {"3 x\n", 1}, {"3 2\n0 1\n", 2}, {"3 1\n0 a\n", 2}, {"3 1\n0 1\n1 2\n", 3}};
  for (const auto& [text, line] : cases) {
    CAPTURE(text);
    try {
      (void)parse_hypergraph(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    } catch (const Error& e) {
      FAIL(e.what());
    }
  }
}

TEST_CASE("negative vertex ids are rejected") {
  CHECK_THROWS_AS(parse_hypergraph("3 1\n-1\n"), Error);
}

TEST_CASE("canonical text round-trips") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph h = random_k_uniform({.n = 9, .m = 7, .k = 3, .seed = seed});
    const std::string text = emit_hypergraph(h);
    CHECK(parse_hypergraph(text).graph == h);
    CHECK(emit_hypergraph(parse_hypergraph(text).graph) == text);
  }
  CHECK(emit_hypergraph(Hypergraph::build(2, {})) == "2 0\n");
  CHECK(emit_hypergraph(figure2()) == "6 4\n0 1 2\n3 4 5\n0 1 3\n2 4 5\n");
}

TEST_CASE("several instances in one stream") {
  const auto all = parse_hypergraph_stream("2 1\n0 1\n# next\n3 0\n4 4\n0 1\n1 2\n2 3\n0 3\n");
  REQUIRE(all.size() == 3);
  CHECK(all[1].graph.order() == 3);
  CHECK(all[2].graph == cycle4());
}

TEST_CASE("missing files raise Io") {
  try {
    (void)read_file("/nonexistent/hypergraph.txt");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
