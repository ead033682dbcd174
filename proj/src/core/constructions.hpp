#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypergraph.hpp"

namespace tgame {

// Pendant structure of a k-corona: every edge is either an edge of the base
// hypergraph or the j-th edge attached at base vertex i (both 1-based, as
// e(j, i)).
struct CoronaTag {
  bool attached = false;
  int j = 0;
  int i = 0;
};

struct CoronaLabels {
  std::vector<CoronaTag> tags;  // indexed by EdgeId
  int k = 0;
  int base_order = 0;

  // 2^(j-1) for attached edges, 0 for base edges.
  long long edge_weight(EdgeId e) const;
};

struct LabeledHypergraph {
  std::shared_ptr<const Hypergraph> graph;
  std::optional<CoronaLabels> labels;
  std::string family;
  std::map<std::string, std::string> params;
  // Human-readable vertex names where the construction has them (x1, y2...).
  std::vector<std::string> vertex_names;
};

// k vertex-disjoint copies of H1 = two 3-edges {x1,x2,x3}, {y1,y2,y3} joined
// by the matching {x1,y1}, {x2,y2}, {x3,y3}. Copy c uses vertices 6c..6c+5
// in the order x1, x2, x3, y1, y2, y3.
LabeledHypergraph family_Hk(int k);

// Attaches k edges at every base vertex; edge e(j, i) is base vertex i-1 plus
// pendant_size - 1 fresh vertices. Base edges keep their ids; attached edges
// follow, ordered by i then j.
LabeledHypergraph k_corona(const Hypergraph& base, int k, int pendant_size);

Hypergraph cycle4();
// Six vertices x1, x2, x3, y1, y2, y3 (ids 0..5) with edges {x1,x2,x3},
// {y1,y2,y3}, {x1,x2,y1}, {x3,y2,y3}: 3-uniform, 2-regular, two overlapping
// pairs.
Hypergraph figure2();
Hypergraph complete_uniform(int n, int k);
Hypergraph isolated_edges(int t, int k);
// Graph cycle C_n as a 2-uniform hypergraph, n >= 3.
Hypergraph cycle(int n);

// Dispatches "C4", "figure2", "complete", "isolated_edges", "cycle", "Hk"
// and "corona" by name; parameters are read from `params` (n, k, t,
// pendant). "corona" needs `base`. Throws UnknownName.
LabeledHypergraph named_small(std::string_view name, const std::map<std::string, int>& params,
                              const Hypergraph* base = nullptr);

enum class NeighborhoodMode { Open, Closed };

// One edge per vertex of the simple graph g: its open or closed
// neighborhood. Transversals of the result are the (total) dominating sets
// of g. Throws InvalidArgument unless g is a simple graph, IsolatedVertex for
// an isolated vertex in open mode.
Hypergraph neighborhood_hypergraph(const Hypergraph& g, NeighborhoodMode mode);

}  // namespace tgame
