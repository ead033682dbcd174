#include "strategies.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>

#include "error.hpp"
#include "generators.hpp"

namespace tgame {

namespace {

void require_edge_hitter(const GameState& s, std::string_view who) {
  if (s.to_move() != PlayerRole::EdgeHitter) {
    throw Error(ErrorCode::InvalidArgument, std::string(who) + " only plays Edge-hitter");
  }
}

void require_live(const GameState& s) {
  if (s.is_terminal()) throw Error(ErrorCode::IllegalMove, "no move in a finished game");
}

// The first vertex (lowest id) among `candidates` maximizing `score`.
template <class Score>
VertexId argmax(const std::vector<VertexId>& candidates, Score score) {
  VertexId best = -1;
  long long best_score = std::numeric_limits<long long>::min();
  for (VertexId v : candidates) {
    const long long sc = score(v);
    if (sc > best_score) {
      best = v;
      best_score = sc;
    }
  }
  return best;
}

int blue_neighbors(const ResidualView& r, VertexId v) {
  int count = 0;
  for (VertexId w : r.neighbors(v)) count += r.degree(w) == 1 ? 1 : 0;
  return count;
}

bool has_green(const ResidualView& r, const std::vector<VertexId>& vertices) {
  return std::any_of(vertices.begin(), vertices.end(), [&](VertexId v) { return r.degree(v) == 2; });
}

// Green vertex of `vertices` with most blue neighbors; lowest id on ties.
VertexId committed_move(const ResidualView& r, const std::vector<VertexId>& vertices) {
  std::vector<VertexId> green;
  for (VertexId v : vertices) {
    if (r.degree(v) == 2) green.push_back(v);
  }
  return argmax(green, [&](VertexId v) { return blue_neighbors(r, v); });
}

bool shares_two(const Edge& a, const Edge& b) {
  int shared = 0;
  for (VertexId v : a) shared += std::binary_search(b.begin(), b.end(), v) ? 1 : 0;
  return shared >= 2;
}

// First component (by smallest vertex) that is 2-regular and linear.
std::optional<std::vector<VertexId>> regular_linear_component(const ResidualView& r) {
  for (const auto& comp : r.components()) {
    if (!std::all_of(comp.begin(), comp.end(), [&](VertexId v) { return r.degree(v) == 2; })) {
      continue;
    }
    std::vector<EdgeId> inside;
    for (EdgeId e : r.uncovered_edges()) {
      if (std::binary_search(comp.begin(), comp.end(), r.base().edge(e).front())) inside.push_back(e);
    }
    bool linear = true;
    for (std::size_t a = 0; a < inside.size() && linear; ++a) {
      for (std::size_t b = a + 1; b < inside.size() && linear; ++b) {
        linear = !shares_two(r.base().edge(inside[a]), r.base().edge(inside[b]));
      }
    }
    if (linear) return comp;
  }
  return std::nullopt;
}

// Lowest vertex of the first uncovered edge all of whose vertices have
// residual degree 1.
std::optional<VertexId> isolated_edge_vertex(const ResidualView& r) {
  for (EdgeId e : r.uncovered_edges()) {
    const Edge& edge = r.base().edge(e);
    if (std::all_of(edge.begin(), edge.end(), [&](VertexId v) { return r.degree(v) == 1; })) {
      return edge.front();
    }
  }
  return std::nullopt;
}

std::optional<VertexId> finishing_move(const GameState& s) {
  for (VertexId v = 0; v < s.hypergraph().order(); ++v) {
    if (s.hits(v) != 0 && s.hits(v) == s.uncovered()) return v;
  }
  return std::nullopt;
}

VertexId max_degree_vertex(const ResidualView& r) {
  return argmax(r.active_vertices(), [&](VertexId v) { return r.degree(v); });
}

std::string join_ids(const std::vector<VertexId>& ids) {
  std::string out;
  for (VertexId v : ids) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

Decision ExactStrategy::choose(const GameState& s) {
  require_live(s);
  if (!solver_ || &solver_->hypergraph() != &s.hypergraph()) {
    solver_ = std::make_shared<GameSolver>(s.shared_hypergraph(), limits_);
  }
  return {solver_->best_move(s), "optimal"};
}

Decision GreedyStrategy::choose(const GameState& s) {
  require_live(s);
  return {argmax(legal_moves(s), [&](VertexId v) { return std::popcount(s.hits(v)); }), "greedy"};
}

Decision RandomStrategy::choose(const GameState& s) {
  require_live(s);
  const std::vector<VertexId> moves = legal_moves(s);
  const std::uint64_t mix = seed_ ^ (s.uncovered() * 0x9E3779B97F4A7C15ULL) ^
                            (static_cast<std::uint64_t>(s.to_move()) << 63);
  Rng rng(mix);
  return {moves[static_cast<std::size_t>(uniform_below(rng, moves.size()))], "random"};
}

std::vector<long long> move_decreases3(const GameState& s) {
  const long long now = weight3(s.residual());
  std::vector<long long> out;
  for (VertexId v : legal_moves(s)) {
    out.push_back(now - weight3(ResidualView(s.hypergraph(), s.covered() | s.hits(v))));
  }
  return out;
}

Decision EdgeHitterHierarchy3::choose(const GameState& s) {
  require_live(s);
  require_edge_hitter(s, "eh3");
  const ResidualView r = s.residual();
  const long long weight = weight3(r);

  if (auto v = finishing_move(s); v && weight >= scheme3::kTarget) return {*v, "trivial"};

  if (!committed_.empty()) {
    if (has_green(r, committed_)) return {committed_move(r, committed_), "committed"};
    committed_.clear();
  }

  if (r.max_degree() >= 4) return {max_degree_vertex(r), "max_degree"};

  const std::vector<VertexId> moves = legal_moves(s);
  const std::vector<long long> decrease = move_decreases3(s);
  auto decrease_of = [&](VertexId v) {
    const auto i = static_cast<std::size_t>(std::lower_bound(moves.begin(), moves.end(), v) - moves.begin());
    return decrease[i];
  };
  const VertexId biggest = argmax(moves, decrease_of);
  if (decrease_of(biggest) >= 68) return {biggest, "decrease68"};

  for (VertexId v : moves) {
    if (r.degree(v) >= 3) return {v, "white"};
  }

  if (decrease_of(biggest) >= 64) return {biggest, "decrease64"};

  if (auto comp = regular_linear_component(r)) {
    committed_ = std::move(*comp);
    return {committed_move(r, committed_), "commit"};
  }

  if (auto v = isolated_edge_vertex(r)) return {*v, "isolated"};

  return {moves.front(), "fallback", true};
}

std::string EdgeHitterHierarchy3::context_key() const { return join_ids(committed_); }

Decision EdgeHitterHierarchy4::choose(const GameState& s) {
  require_live(s);
  require_edge_hitter(s, "eh4");
  const ResidualView r = s.residual();
  // Edge-hitter to move: the frozen degree is the current maximum degree.
  const long long weight = weight4(r, r.max_degree());

  if (auto v = finishing_move(s); v && weight >= scheme4::kTarget) return {*v, "trivial"};

  if (!committed_.empty()) {
    if (has_green(r, committed_)) return {committed_move(r, committed_), "committed"};
    committed_.clear();
  }

  if (r.max_degree() >= 3) return {max_degree_vertex(r), "max_degree"};

  const std::vector<EdgeId> live = r.uncovered_edges();
  for (std::size_t a = 0; a < live.size(); ++a) {
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      const Edge& ea = r.base().edge(live[a]);
      const Edge& eb = r.base().edge(live[b]);
      if (!shares_two(ea, eb)) continue;
      for (VertexId v : ea) {
        if (std::binary_search(eb.begin(), eb.end(), v)) return {v, "overlap"};
      }
    }
  }

  for (VertexId v : r.active_vertices()) {
    if (r.degree(v) == 2 && blue_neighbors(r, v) > 0) return {v, "green_blue"};
  }

  if (auto v = isolated_edge_vertex(r)) return {*v, "isolated"};

  if (auto comp = regular_linear_component(r)) {
    committed_ = std::move(*comp);
    return {committed_move(r, committed_), "commit"};
  }

  return {legal_moves(s).front(), "fallback", true};
}

std::string EdgeHitterHierarchy4::context_key() const { return join_ids(committed_); }

Decision StallerCorona::choose(const GameState& s) {
  require_live(s);
  if (s.to_move() != PlayerRole::Staller) {
    throw Error(ErrorCode::InvalidArgument, "corona only plays Staller");
  }
  const ResidualView r = s.residual();
  if (labels_.tags.size() != static_cast<std::size_t>(s.hypergraph().size())) {
    throw Error(ErrorCode::InvalidArgument, "corona labels do not match the hypergraph");
  }
  long long lightest = 0;
  for (EdgeId e : r.uncovered_edges()) {
    const long long w = labels_.edge_weight(e);
    if (w > 0 && (lightest == 0 || w < lightest)) lightest = w;
  }
  if (lightest > 0) {
    for (VertexId v = 0; v < s.hypergraph().order(); ++v) {
      if (r.degree(v) != 1) continue;
      const auto e = static_cast<EdgeId>(std::countr_zero(s.hits(v)));
      if (labels_.edge_weight(e) == lightest) return {v, "lightest_pendant"};
    }
  }
  // Nothing the rule can target: the rule is vacuous here.
  return {legal_moves(s).front(), "fallback", true};
}

std::unique_ptr<Strategy> make_strategy(std::string_view spec,
                                        const std::optional<CoronaLabels>& labels,
                                        const SolveLimits& limits) {
  if (spec == "exact") return std::make_unique<ExactStrategy>(limits);
  if (spec == "greedy") return std::make_unique<GreedyStrategy>();
  if (spec == "eh3") return std::make_unique<EdgeHitterHierarchy3>();
  if (spec == "eh4") return std::make_unique<EdgeHitterHierarchy4>();
  if (spec == "corona") {
    if (!labels) throw Error(ErrorCode::InvalidArgument, "corona strategy needs corona labels");
    return std::make_unique<StallerCorona>(*labels);
  }
  if (spec.starts_with("random:")) {
    const std::string_view digits = spec.substr(7);
    std::uint64_t seed = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorCode::InvalidArgument, "bad random seed in '" + std::string(spec) + "'");
    }
    return std::make_unique<RandomStrategy>(seed);
  }
  throw Error(ErrorCode::UnknownName, "unknown strategy '" + std::string(spec) + "'");
}

MatchResult play_match(std::shared_ptr<const Hypergraph> h, const Strategy& edge_hitter,
                       const Strategy& staller, PlayerRole first,
                       std::optional<WeightScheme> scheme, EdgeMask precovered) {
  GameState s(std::move(h), first, precovered);
  std::unique_ptr<Strategy> eh = edge_hitter.clone();
  std::unique_ptr<Strategy> st = staller.clone();

  MatchResult result;
  result.transcript = transcript_of(s);
  std::optional<WeightMeter> meter;
  if (scheme) {
    meter.emplace(*scheme, s);
    result.ledger.emplace();
    result.ledger->initial_weight = meter->current();
    result.transcript.scheme = static_cast<int>(*scheme);
    result.transcript.initial_weight = meter->current();
  }

  while (!s.is_terminal()) {
    Strategy& mover = s.to_move() == PlayerRole::EdgeHitter ? *eh : *st;
    const Decision d = mover.choose(s);
    if (!s.is_legal(d.vertex)) {
      throw Error(ErrorCode::IllegalMove, mover.name() + " chose illegal vertex " + std::to_string(d.vertex));
    }
    GameState next = s.apply(d.vertex);
    TranscriptMove tm;
    tm.index = s.length();
    tm.player = s.to_move();
    tm.vertex = d.vertex;
    tm.newly_covered = edges_of(next.history().back().newly_covered);
    tm.rule = d.rule;
    tm.flagged = d.flagged;
    if (meter) {
      tm.weight_decrease = meter->advance(next);
      result.ledger->push(*tm.weight_decrease);
    }
    result.transcript.moves.push_back(std::move(tm));
    s = std::move(next);
  }
  result.transcript.final_covered = edges_of(s.covered());
  result.transcript.complete = true;
  if (meter) result.transcript.final_weight = meter->current();
  return result;
}

}  // namespace tgame
