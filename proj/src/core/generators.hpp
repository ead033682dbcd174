#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypergraph.hpp"

namespace tgame {

// 64-bit Mersenne Twister: its output sequence is fixed by the C++ standard,
// so seeded corpora are identical across platforms. Range reduction is done
// here rather than with std::uniform_int_distribution, whose algorithm is
// implementation-defined.
using Rng = std::mt19937_64;

// Unbiased draw from [0, bound); bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

struct GenSpec {
  int n = 0;
  int m = 0;
  int k = 3;
  bool linear = false;
  std::optional<int> max_degree;
  std::uint64_t seed = 0;
  int max_retries = 1000;
};

// m distinct k-edges on n vertices, sampled without replacement, optionally
// restricted to linear hypergraphs and/or a degree cap. Throws Unsatisfiable
// when m > C(n, k) or the retry budget runs out.
Hypergraph random_k_uniform(const GenSpec& spec);

// Every hypergraph on the vertex set {0..n_max-1} whose 1..m_max edges are
// distinct k-sets, in lexicographic order of the edge-index sequence (each
// list is followed by its extensions). Hypergraphs on fewer vertices appear
// with isolated vertices.
class SmallEnumerator {
 public:
  // Throws LimitExceeded if the stream would exceed max_instances.
  SmallEnumerator(int n_max, int m_max, int k, std::uint64_t max_instances = 10'000'000);

  std::optional<Hypergraph> next();
  std::uint64_t total() const { return total_; }

 private:
  int n_;
  int m_max_;
  std::vector<std::vector<VertexId>> universe_;
  std::vector<std::size_t> pick_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t total_ = 0;
};

std::vector<Hypergraph> enumerate_small(int n_max, int m_max, int k);

// An instance tagged with its provenance for reports.
struct CorpusEntry {
  std::string family;
  std::optional<std::uint64_t> seed;
  Hypergraph graph;
};

// `count` random k-uniform instances; instance i uses seed base_seed + i,
// which also picks n in [k, n_max] and m in [1, min(m_max, C(n, k))].
std::vector<CorpusEntry> random_corpus(int k, int count, int n_max, int m_max,
                                       std::uint64_t base_seed);

}  // namespace tgame
