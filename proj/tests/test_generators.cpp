#include <doctest.h>

#include <set>

#include "error.hpp"
#include "generators.hpp"
#include "hypergraph.hpp"

using namespace tgame;

TEST_CASE("random hypergraphs are reproducible from the seed") {
  const GenSpec spec{.n = 10, .m = 8, .k = 3, .seed = 99};
  CHECK(random_k_uniform(spec) == random_k_uniform(spec));
  GenSpec other = spec;
  other.seed = 100;
  CHECK_FALSE(random_k_uniform(spec) == random_k_uniform(other));
}

TEST_CASE("random hypergraphs meet the requested shape") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Hypergraph h = random_k_uniform({.n = 12, .m = 6, .k = 3, .linear = true, .max_degree = 2, .seed = seed});
    const StructureSummary s = structure_queries(h);
    CHECK(h.size() == 6);
    CHECK(s.uniformity == 3);
    CHECK(s.linear);
    CHECK(s.max_degree <= 2);
    CHECK(h.removed_duplicates() == 0);
  }
}

TEST_CASE("impossible requests are unsatisfiable") {
  try {
    (void)random_k_uniform({.n = 5, .m = 11, .k = 3, .seed = 1});
    FAIL("expected Unsatisfiable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsatisfiable);
  }
}

TEST_CASE("exhaustive enumeration counts") {
  CHECK(enumerate_small(3, 1, 3).size() == 1);
  CHECK(enumerate_small(4, 2, 3).size() == 4 + 6);
  CHECK(enumerate_small(3, 3, 2).size() == 3 + 3 + 1);
  CHECK(SmallEnumerator(5, 10, 2).total() == 1023);
}

TEST_CASE("enumeration never repeats an instance") {
  SmallEnumerator it(5, 3, 3);
  std::set<std::vector<Edge>> seen;
  std::uint64_t count = 0;
  while (auto h = it.next()) {
    CHECK(seen.insert(h->edges()).second);
    CHECK(h->order() == 5);
    ++count;
  }
  CHECK(count == it.total());
}

TEST_CASE("random corpora are tagged and reproducible") {
  const auto a = random_corpus(3, 20, 9, 10, 500);
  const auto b = random_corpus(3, 20, 9, 10, 500);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].graph == b[i].graph);
    CHECK(a[i].seed == 500 + i);
    CHECK(a[i].graph.order() <= 9);
    CHECK(a[i].graph.size() >= 1);
    CHECK(a[i].graph.size() <= 10);
  }
}

TEST_CASE("uniform_below stays in range") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_below(rng, 7) < 7);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
}
