#include "constructions.hpp"

#include <string>

#include "error.hpp"
#include "weights.hpp"

namespace tgame {

long long CoronaLabels::edge_weight(EdgeId e) const {
  const CoronaTag& t = tags.at(static_cast<std::size_t>(e));
  return t.attached ? (1LL << (t.j - 1)) : 0;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

int param(const std::map<std::string, int>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::InvalidArgument, "missing parameter '" + key + "'");
  }
  return it->second;
}

}  // namespace

LabeledHypergraph family_Hk(int k) {
  require(k >= 1, "family H_k needs k >= 1");
  std::vector<std::vector<VertexId>> edges;
  LabeledHypergraph out;
  for (int c = 0; c < k; ++c) {
    const VertexId x1 = 6 * c, x2 = x1 + 1, x3 = x1 + 2, y1 = x1 + 3, y2 = x1 + 4, y3 = x1 + 5;
    edges.push_back({x1, x2, x3});
    edges.push_back({y1, y2, y3});
    edges.push_back({x1, y1});
    edges.push_back({x2, y2});
    edges.push_back({x3, y3});
    const std::string suffix = k == 1 ? "" : "_" + std::to_string(c + 1);
    for (const char* name : {"x1", "x2", "x3", "y1", "y2", "y3"}) {
      out.vertex_names.push_back(name + suffix);
    }
  }
  out.graph = std::make_shared<const Hypergraph>(Hypergraph::build(6 * k, edges));
  out.family = "Hk";
  out.params["k"] = std::to_string(k);
  return out;
}

LabeledHypergraph k_corona(const Hypergraph& base, int k, int pendant_size) {
  require(k >= 1, "corona needs k >= 1");
  require(pendant_size >= 2, "corona pendant edges need at least 2 vertices");
  std::vector<std::vector<VertexId>> edges(base.edges().begin(), base.edges().end());
  CoronaLabels labels;
  labels.k = k;
  labels.base_order = base.order();
  labels.tags.assign(edges.size(), CoronaTag{});
  VertexId next = base.order();
  for (int i = 1; i <= base.order(); ++i) {
    for (int j = 1; j <= k; ++j) {
      std::vector<VertexId> e{i - 1};
      for (int p = 1; p < pendant_size; ++p) e.push_back(next++);
      edges.push_back(std::move(e));
      labels.tags.push_back({true, j, i});
    }
  }
  LabeledHypergraph out;
  out.graph = std::make_shared<const Hypergraph>(Hypergraph::build(next, edges));
  if (out.graph->size() != static_cast<int>(labels.tags.size())) {
    // Only possible if the base itself had repeated edges, which build()
    // already removed.
    throw Error(ErrorCode::InvalidArgument, "corona labels out of step with edges");
  }
  out.labels = std::move(labels);
  out.family = "corona";
  out.params["k"] = std::to_string(k);
  out.params["pendant"] = std::to_string(pendant_size);
  out.params["base_n"] = std::to_string(base.order());
  out.params["base_m"] = std::to_string(base.size());
  return out;
}

Hypergraph cycle4() { return cycle(4); }

Hypergraph figure2() {
  Hypergraph h = Hypergraph::build(6, {{0, 1, 2}, {3, 4, 5}, {0, 1, 3}, {2, 4, 5}});
  // The edge set is read off the drawing; refuse to hand out anything that
  // lacks the drawn properties.
  const StructureSummary s = structure_queries(h);
  if (s.uniformity != 3 || !s.is_regular(2) || s.linear || bound_rhs_3A(h) != 144) {
    throw Error(ErrorCode::InvalidArgument, "figure2 construction failed validation");
  }
  return h;
}

Hypergraph complete_uniform(int n, int k) {
  require(k >= 1 && n >= k && n <= 24, "complete(n, k) needs 1 <= k <= n <= 24");
  std::vector<std::vector<VertexId>> edges;
  std::vector<VertexId> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    edges.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return Hypergraph::build(n, edges);
}

Hypergraph isolated_edges(int t, int k) {
  require(t >= 0 && k >= 1, "isolated_edges(t, k) needs t >= 0, k >= 1");
  std::vector<std::vector<VertexId>> edges;
  for (int e = 0; e < t; ++e) {
    std::vector<VertexId> edge;
    for (int i = 0; i < k; ++i) edge.push_back(e * k + i);
    edges.push_back(std::move(edge));
  }
  return Hypergraph::build(t * k, edges);
}

Hypergraph cycle(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  std::vector<std::vector<VertexId>> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Hypergraph::build(n, edges);
}

LabeledHypergraph named_small(std::string_view name, const std::map<std::string, int>& params,
                              const Hypergraph* base) {
  auto plain = [&](Hypergraph h) {
    LabeledHypergraph out;
    out.graph = std::make_shared<const Hypergraph>(std::move(h));
    out.family = std::string(name);
    for (const auto& [key, value] : params) out.params[key] = std::to_string(value);
    return out;
  };
  if (name == "C4") return plain(cycle4());
  if (name == "figure2") {
    LabeledHypergraph out = plain(figure2());
    out.vertex_names = {"x1", "x2", "x3", "y1", "y2", "y3"};
    return out;
  }
  if (name == "complete") return plain(complete_uniform(param(params, "n"), param(params, "k")));
  if (name == "isolated_edges") return plain(isolated_edges(param(params, "t"), param(params, "k")));
  if (name == "cycle") return plain(cycle(param(params, "n")));
  if (name == "Hk") return family_Hk(param(params, "k"));
  if (name == "corona") {
    require(base != nullptr, "corona needs a base hypergraph");
    auto it = params.find("pendant");
    return k_corona(*base, param(params, "k"), it == params.end() ? 2 : it->second);
  }
  throw Error(ErrorCode::UnknownName, "unknown construction '" + std::string(name) + "'");
}

Hypergraph neighborhood_hypergraph(const Hypergraph& g, NeighborhoodMode mode) {
  for (const Edge& e : g.edges()) {
    require(e.size() == 2, "neighborhood hypergraphs are defined for simple graphs");
  }
  std::vector<std::vector<VertexId>> edges;
  for (VertexId v = 0; v < g.order(); ++v) {
    std::vector<VertexId> hood;
    if (mode == NeighborhoodMode::Closed) hood.push_back(v);
    for (EdgeId e : g.incident(v)) {
      const Edge& pair = g.edge(e);
      hood.push_back(pair[0] == v ? pair[1] : pair[0]);
    }
    if (hood.empty()) {
      throw Error(ErrorCode::IsolatedVertex,
                  "vertex " + std::to_string(v) + " is isolated; open neighborhood is empty");
    }
    edges.push_back(std::move(hood));
  }
  return Hypergraph::build(g.order(), edges);
}

}  // namespace tgame
