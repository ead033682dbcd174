#include "hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "error.hpp"

namespace tgame {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::UnreachableCell: return "UnreachableCell";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::NoAttachedEdgeUncovered: return "NoAttachedEdgeUncovered";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

int shared_vertices(const Edge& a, const Edge& b) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

template <class EdgeRange>
std::vector<std::vector<VertexId>> components_of(int n, const EdgeRange& edges,
                                                 const std::vector<int>& degrees) {
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(e[0], e[i]);
  }
  std::map<int, std::vector<VertexId>> by_root;
  for (VertexId v = 0; v < n; ++v) {
    if (degrees[static_cast<std::size_t>(v)] > 0) by_root[sets.find(v)].push_back(v);
  }
  std::vector<std::vector<VertexId>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  // The root of a set is its smallest member, so map order is already the
  // order of smallest vertices.
  return out;
}

}  // namespace

Hypergraph Hypergraph::build(int n, const std::vector<std::vector<VertexId>>& raw_edges) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  Hypergraph h;
  h.n_ = n;
  std::map<Edge, std::size_t> seen;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    Edge e = raw_edges[i];
    if (e.empty()) {
      throw Error(ErrorCode::EmptyEdge, "edge " + std::to_string(i) + " is empty");
    }
    for (VertexId v : e) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " in edge " + std::to_string(i) +
                        " is outside 0.." + std::to_string(n - 1));
      }
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    auto [it, inserted] = seen.emplace(e, h.edges_.size());
    if (inserted) {
      h.edges_.push_back(std::move(e));
      h.multiplicity_.push_back(1);
    } else {
      ++h.multiplicity_[it->second];
    }
  }
  h.incidence_.assign(static_cast<std::size_t>(n), {});
  h.masks_.assign(static_cast<std::size_t>(n), 0);
  for (EdgeId e = 0; e < h.size(); ++e) {
    for (VertexId v : h.edges_[static_cast<std::size_t>(e)]) {
      h.incidence_[static_cast<std::size_t>(v)].push_back(e);
      if (e < kMaxMaskEdges) h.masks_[static_cast<std::size_t>(v)] |= edge_bit(e);
    }
  }
  return h;
}

EdgeMask Hypergraph::all_edges() const {
  const int m = size();
  if (m >= kMaxMaskEdges) return ~EdgeMask{0};
  return (EdgeMask{1} << m) - 1;
}

int Hypergraph::removed_duplicates() const {
  int removed = 0;
  for (int c : multiplicity_) removed += c - 1;
  return removed;
}

bool StructureSummary::is_regular(int d) const {
  return !degrees.empty() &&
         std::all_of(degrees.begin(), degrees.end(), [d](int x) { return x == d; });
}

StructureSummary structure_queries(const Hypergraph& h) {
  StructureSummary s;
  s.degrees.resize(static_cast<std::size_t>(h.order()));
  for (VertexId v = 0; v < h.order(); ++v) {
    s.degrees[static_cast<std::size_t>(v)] = h.degree(v);
    s.max_degree = std::max(s.max_degree, h.degree(v));
  }
  if (h.size() > 0) {
    const std::size_t k = h.edge(0).size();
    bool uniform = true;
    std::size_t smallest = k;
    for (const Edge& e : h.edges()) {
      uniform = uniform && e.size() == k;
      smallest = std::min(smallest, e.size());
    }
    if (uniform) s.uniformity = static_cast<int>(k);
    s.min_edge_size = static_cast<int>(smallest);
  }
  s.linear = is_linear(h);
  s.components = components_of(h.order(), h.edges(), s.degrees);
  return s;
}

bool is_linear(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (shared_vertices(edges[a], edges[b]) >= 2) return false;
    }
  }
  return true;
}

bool is_cycle4(const Hypergraph& h) {
  if (h.order() != 4 || h.size() != 4) return false;
  const StructureSummary s = structure_queries(h);
  return s.uniformity == 2 && s.is_regular(2) && s.components.size() == 1;
}

ResidualView::ResidualView(const Hypergraph& base, EdgeMask covered)
    : base_(&base), covered_(covered & base.all_edges()) {
  if (!base.fits_mask()) {
    throw Error(ErrorCode::LimitExceeded,
                "residual views support at most " + std::to_string(kMaxMaskEdges) + " edges");
  }
  degrees_.assign(static_cast<std::size_t>(base.order()), 0);
  for (EdgeId e = 0; e < base.size(); ++e) {
    if (is_covered(e)) continue;
    ++edge_count_;
    for (VertexId v : base.edge(e)) ++degrees_[static_cast<std::size_t>(v)];
  }
  for (int d : degrees_) {
    max_degree_ = std::max(max_degree_, d);
    if (d > 0) ++active_count_;
  }
}

std::vector<EdgeId> ResidualView::uncovered_edges() const {
  std::vector<EdgeId> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (EdgeId e = 0; e < base_->size(); ++e) {
    if (!is_covered(e)) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> ResidualView::active_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < base_->order(); ++v) {
    if (active(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> ResidualView::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : base_->incident(v)) {
    if (is_covered(e)) continue;
    for (VertexId w : base_->edge(e)) {
      if (w != v) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> ResidualView::uniformity() const {
  std::optional<int> k;
  for (EdgeId e = 0; e < base_->size(); ++e) {
    if (is_covered(e)) continue;
    const int size = static_cast<int>(base_->edge(e).size());
    if (!k) {
      k = size;
    } else if (*k != size) {
      return std::nullopt;
    }
  }
  return k;
}

bool ResidualView::is_linear() const {
  const std::vector<EdgeId> live = uncovered_edges();
  for (std::size_t a = 0; a < live.size(); ++a) {
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      if (shared_vertices(base_->edge(live[a]), base_->edge(live[b])) >= 2) return false;
    }
  }
  return true;
}

std::vector<std::vector<VertexId>> ResidualView::components() const {
  std::vector<Edge> live;
  for (EdgeId e : uncovered_edges()) live.push_back(base_->edge(e));
  return components_of(base_->order(), live, degrees_);
}

Hypergraph ResidualView::as_hypergraph() const {
  std::vector<std::vector<VertexId>> live;
  for (EdgeId e : uncovered_edges()) live.push_back(base_->edge(e));
  return Hypergraph::build(base_->order(), live);
}

ResidualView residual(const Hypergraph& h, EdgeMask covered) {
  return ResidualView(h, covered);
}

}  // namespace tgame
