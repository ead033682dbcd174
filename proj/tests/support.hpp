#pragma once

#include <memory>

#include "constructions.hpp"
#include "hypergraph.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::EdgeList edge_list(const tgame::Hypergraph& h) {
  oracle::EdgeList out;
  for (const auto& e : h.edges()) out.emplace_back(e.begin(), e.end());
  return out;
}

inline std::shared_ptr<const tgame::Hypergraph> share(tgame::Hypergraph h) {
  return std::make_shared<const tgame::Hypergraph>(std::move(h));
}

inline tgame::Hypergraph h1() { return *tgame::family_Hk(1).graph; }

inline tgame::Hypergraph single_edge(int k) {
  std::vector<tgame::VertexId> e;
  for (int i = 0; i < k; ++i) e.push_back(i);
  return tgame::Hypergraph::build(k, {e});
}

// Dual of K5: vertices are the 10 pairs of {0..4}, one 4-edge per point
// listing the pairs through it. 4-uniform, 2-regular, linear.
inline tgame::Hypergraph k5_dual() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  }
  std::vector<std::vector<tgame::VertexId>> edges(5);
  for (int i = 0; i < 10; ++i) {
    edges[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].first)].push_back(i);
    edges[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].second)].push_back(i);
  }
  return tgame::Hypergraph::build(10, edges);
}

}  // namespace testing_support
