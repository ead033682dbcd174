#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tgame {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Bit e is set iff edge e belongs to the set. Game search is limited to
// hypergraphs with at most kMaxMaskEdges edges.
using EdgeMask = std::uint64_t;
inline constexpr int kMaxMaskEdges = 64;

// Sorted, duplicate-free list of vertices.
using Edge = std::vector<VertexId>;

inline EdgeMask edge_bit(EdgeId e) { return EdgeMask{1} << e; }

// Immutable hypergraph on the vertex set {0, ..., n-1}. Edges are kept in a
// stable order so that an EdgeId is the edge's position, which doubles as its
// bit in an EdgeMask. Repeated edges are collapsed at construction; the number
// of copies seen for each kept edge is retained in multiplicity().
class Hypergraph {
 public:
  Hypergraph() = default;

  // Canonicalizes every edge (sort, drop repeated vertices) and removes
  // repeated edges, keeping the first copy. Throws EmptyEdge or
  // IndexOutOfRange.
  static Hypergraph build(int n, const std::vector<std::vector<VertexId>>& raw_edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  // Edges containing v, ascending.
  const std::vector<EdgeId>& incident(VertexId v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  // Only meaningful when size() <= kMaxMaskEdges.
  EdgeMask incidence_mask(VertexId v) const { return masks_[static_cast<std::size_t>(v)]; }
  EdgeMask all_edges() const;
  bool fits_mask() const { return size() <= kMaxMaskEdges; }

  const std::vector<int>& multiplicity() const { return multiplicity_; }
  int removed_duplicates() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> multiplicity_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<EdgeMask> masks_;
};

struct StructureSummary {
  std::vector<int> degrees;
  int max_degree = 0;
  // Common edge size, or empty when sizes differ or there are no edges.
  std::optional<int> uniformity;
  int min_edge_size = 0;
  bool linear = true;
  // Partition of the vertices of positive degree; each component sorted,
  // components ordered by smallest vertex.
  std::vector<std::vector<VertexId>> components;

  bool is_regular(int d) const;
};

StructureSummary structure_queries(const Hypergraph& h);

bool is_linear(const Hypergraph& h);

// True when h is the 4-cycle C4 (exactly four vertices, four 2-edges, one
// 2-regular component).
bool is_cycle4(const Hypergraph& h);

// The residual hypergraph H|S: the base hypergraph with the edges of `covered`
// deleted. Vertex ids are never renumbered; a vertex whose residual degree
// drops to zero is merely inactive. Holds a reference to `base`, which must
// outlive the view.
class ResidualView {
 public:
  ResidualView(const Hypergraph& base, EdgeMask covered);

  const Hypergraph& base() const { return *base_; }
  EdgeMask covered() const { return covered_; }
  EdgeMask uncovered() const { return base_->all_edges() & ~covered_; }

  bool is_covered(EdgeId e) const { return (covered_ >> e) & 1U; }
  int degree(VertexId v) const { return degrees_[static_cast<std::size_t>(v)]; }
  std::span<const int> degrees() const { return degrees_; }
  bool active(VertexId v) const { return degree(v) > 0; }
  int max_degree() const { return max_degree_; }
  int active_count() const { return active_count_; }
  int edge_count() const { return edge_count_; }

  std::vector<EdgeId> uncovered_edges() const;
  std::vector<VertexId> active_vertices() const;
  // Distinct vertices sharing an uncovered edge with v.
  std::vector<VertexId> neighbors(VertexId v) const;

  std::optional<int> uniformity() const;
  bool is_linear() const;
  std::vector<std::vector<VertexId>> components() const;

  // Same vertex set, uncovered edges only, in their original relative order.
  Hypergraph as_hypergraph() const;

 private:
  const Hypergraph* base_;
  EdgeMask covered_;
  std::vector<int> degrees_;
  int max_degree_ = 0;
  int active_count_ = 0;
  int edge_count_ = 0;
};

ResidualView residual(const Hypergraph& h, EdgeMask covered);

}  // namespace tgame
