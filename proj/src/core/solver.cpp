#include "solver.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "error.hpp"

namespace tgame {

namespace {

std::size_t shard_of(EdgeMask key) {
  return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> 58);
}

}  // namespace

MemoTable::MemoTable(int edge_count) : flat_(edge_count <= kFlatMemoEdges) {
  if (flat_) {
    const std::size_t slots = std::size_t{2} << edge_count;
    slots_ = std::make_unique<std::atomic<std::uint8_t>[]>(slots);
  } else {
    shards_ = std::make_unique<Shard[]>(kShards);
  }
}

std::optional<int> MemoTable::get(EdgeMask uncovered, PlayerRole to_move) const {
  const auto role = static_cast<std::size_t>(to_move);
  if (flat_) {
    const std::uint8_t raw =
        slots_[(static_cast<std::size_t>(uncovered) << 1) | role].load(std::memory_order_relaxed);
    if (raw == 0) return std::nullopt;
    return raw - 1;
  }
  const Shard& shard = shards_[shard_of(uncovered)];
  std::lock_guard guard(shard.lock);
  auto it = shard.values[role].find(uncovered);
  if (it == shard.values[role].end()) return std::nullopt;
  return it->second;
}

void MemoTable::put(EdgeMask uncovered, PlayerRole to_move, int value) {
  const auto role = static_cast<std::size_t>(to_move);
  if (flat_) {
    const auto stored = static_cast<std::uint8_t>(value + 1);
    const std::uint8_t old = slots_[(static_cast<std::size_t>(uncovered) << 1) | role].exchange(
        stored, std::memory_order_relaxed);
    if (old == 0) entries_.fetch_add(1, std::memory_order_relaxed);
    return;
  }
  Shard& shard = shards_[shard_of(uncovered)];
  std::lock_guard guard(shard.lock);
  if (shard.values[role].insert_or_assign(uncovered, static_cast<std::uint8_t>(value)).second) {
    entries_.fetch_add(1, std::memory_order_relaxed);
  }
}

GameSolver::GameSolver(std::shared_ptr<const Hypergraph> h, SolveLimits limits,
                       SolverOptions options)
    : graph_(std::move(h)),
      limits_(limits),
      options_(options),
      memo_(graph_ ? graph_->size() : 0),
      started_(std::chrono::steady_clock::now()) {
  if (!graph_) throw Error(ErrorCode::InvalidArgument, "null hypergraph");
  if (graph_->size() > limits_.max_edges || !graph_->fits_mask()) {
    throw Error(ErrorCode::LimitExceeded,
                "instance has " + std::to_string(graph_->size()) +
                    " edges; exact game solving is limited to " +
                    std::to_string(std::min(limits_.max_edges, kMaxMaskEdges)));
  }
  incidence_.reserve(static_cast<std::size_t>(graph_->order()));
  for (VertexId v = 0; v < graph_->order(); ++v) {
    if (graph_->incidence_mask(v) != 0) incidence_.push_back(graph_->incidence_mask(v));
  }
  // Vertices with identical incidence always lead to the same position.
  std::sort(incidence_.begin(), incidence_.end());
  incidence_.erase(std::unique(incidence_.begin(), incidence_.end()), incidence_.end());
}

void GameSolver::count_node() {
  const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (limits_.max_nodes != 0 && n > limits_.max_nodes) {
    throw Error(ErrorCode::LimitExceeded,
                "node budget of " + std::to_string(limits_.max_nodes) + " exhausted");
  }
  if (limits_.time_budget.count() > 0 && (n & 1023) == 0 &&
      std::chrono::steady_clock::now() - started_ > limits_.time_budget) {
    throw Error(ErrorCode::LimitExceeded,
                "time budget of " + std::to_string(limits_.time_budget.count()) + " ms exhausted");
  }
}

void GameSolver::candidate_moves(EdgeMask uncovered, bool edge_hitter,
                                 std::vector<EdgeMask>& out) const {
  out.clear();
  for (EdgeMask inc : incidence_) {
    const EdgeMask hit = inc & uncovered;
    if (hit != 0) out.push_back(hit);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!options_.prune_dominated || out.size() < 2) return;
  // Edge-hitter never needs a move whose hits are a proper subset of another
  // move's; Staller never needs one whose hits are a proper superset.
  std::size_t kept = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < out.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = edge_hitter ? (out[i] & ~out[j]) == 0 : (out[j] & ~out[i]) == 0;
    }
    if (!dominated) out[kept++] = out[i];
  }
  out.resize(kept);
}

int GameSolver::search(EdgeMask uncovered, bool edge_hitter, int depth, Scratch& scratch) {
  if (uncovered == 0) return 0;
  const PlayerRole role = edge_hitter ? PlayerRole::EdgeHitter : PlayerRole::Staller;
  if (auto cached = memo_.get(uncovered, role)) return *cached;
  count_node();

  if (scratch.by_depth.size() <= static_cast<std::size_t>(depth)) {
    scratch.by_depth.resize(static_cast<std::size_t>(depth) + 1);
  }
  candidate_moves(uncovered, edge_hitter, scratch.by_depth[static_cast<std::size_t>(depth)]);
  // Recursion may grow by_depth and invalidate references; index afresh.
  const std::size_t count = scratch.by_depth[static_cast<std::size_t>(depth)].size();
  const int ceiling = std::popcount(uncovered);

  int best = edge_hitter ? std::numeric_limits<int>::max() : -1;
  for (std::size_t i = 0; i < count; ++i) {
    const EdgeMask hit = scratch.by_depth[static_cast<std::size_t>(depth)][i];
    const int v = 1 + search(uncovered & ~hit, !edge_hitter, depth + 1, scratch);
    if (edge_hitter) {
      best = std::min(best, v);
      if (best == 1) break;
    } else {
      best = std::max(best, v);
      if (best == ceiling) break;
    }
  }
  memo_.put(uncovered, role, best);
  return best;
}

int GameSolver::parallel_root(EdgeMask uncovered, bool edge_hitter) {
  std::vector<EdgeMask> moves;
  candidate_moves(uncovered, edge_hitter, moves);
  std::vector<int> values(moves.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto worker = [&] {
    Scratch scratch;
    try {
      for (std::size_t i = next++; i < moves.size(); i = next++) {
        values[i] = 1 + search(uncovered & ~moves[i], !edge_hitter, 1, scratch);
      }
    } catch (...) {
      std::lock_guard guard(failure_lock);
      if (!failure) failure = std::current_exception();
      next = moves.size();
    }
  };
  const int threads = std::max(1, std::min<int>(options_.threads, static_cast<int>(moves.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  const int best = edge_hitter ? *std::min_element(values.begin(), values.end())
                               : *std::max_element(values.begin(), values.end());
  memo_.put(uncovered, edge_hitter ? PlayerRole::EdgeHitter : PlayerRole::Staller, best);
  return best;
}

int GameSolver::value(EdgeMask uncovered, PlayerRole to_move) {
  uncovered &= graph_->all_edges();
  const bool edge_hitter = to_move == PlayerRole::EdgeHitter;
  if (uncovered == 0) return 0;
  if (auto cached = memo_.get(uncovered, to_move)) return *cached;
  if (options_.threads > 1) return parallel_root(uncovered, edge_hitter);
  Scratch scratch;
  return search(uncovered, edge_hitter, 0, scratch);
}

VertexId GameSolver::best_move(const GameState& s) {
  if (s.is_terminal()) throw Error(ErrorCode::IllegalMove, "no move in a finished game");
  const int target = value(s);
  for (VertexId v = 0; v < graph_->order(); ++v) {
    const EdgeMask hit = s.hits(v);
    if (hit == 0) continue;
    const int child = 1 + value(s.uncovered() & ~hit, opponent(s.to_move()));
    if (child == target) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "no move attains the position value");
}

namespace {

class HittingSetSearch {
 public:
  HittingSetSearch(const Hypergraph& h, const SolveLimits& limits)
      : graph_(h), limits_(limits) {}

  int run() {
    best_ = greedy_upper_bound();
    branch(graph_.all_edges(), 0);
    return best_;
  }

 private:
  int greedy_upper_bound() const {
    EdgeMask left = graph_.all_edges();
    int picks = 0;
    while (left != 0) {
      EdgeMask best_hit = 0;
      for (VertexId v = 0; v < graph_.order(); ++v) {
        const EdgeMask hit = graph_.incidence_mask(v) & left;
        if (std::popcount(hit) > std::popcount(best_hit)) best_hit = hit;
      }
      left &= ~best_hit;
      ++picks;
    }
    return picks;
  }

  // Size of a greedy packing of pairwise disjoint uncovered edges.
  int packing_lower_bound(EdgeMask left) const {
    EdgeMask blocked = 0;
    int count = 0;
    while (left != 0) {
      const auto e = static_cast<EdgeId>(std::countr_zero(left));
      left &= left - 1;
      if ((blocked >> e) & 1U) continue;
      ++count;
      for (VertexId v : graph_.edge(e)) blocked |= graph_.incidence_mask(v);
    }
    return count;
  }

  void branch(EdgeMask left, int chosen) {
    if (left == 0) {
      best_ = std::min(best_, chosen);
      return;
    }
    if (++nodes_, limits_.max_nodes != 0 && nodes_ > limits_.max_nodes) {
      throw Error(ErrorCode::LimitExceeded, "node budget exhausted computing tau");
    }
    if (chosen + packing_lower_bound(left) >= best_) return;
    EdgeId pick = -1;
    for (EdgeMask rest = left; rest != 0; rest &= rest - 1) {
      const auto e = static_cast<EdgeId>(std::countr_zero(rest));
      if (pick < 0 || graph_.edge(e).size() < graph_.edge(pick).size()) pick = e;
    }
    for (VertexId v : graph_.edge(pick)) {
      branch(left & ~graph_.incidence_mask(v), chosen + 1);
    }
  }

  const Hypergraph& graph_;
  SolveLimits limits_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

int transversal_number(const Hypergraph& h, const SolveLimits& limits) {
  if (!h.fits_mask()) {
    throw Error(ErrorCode::LimitExceeded,
                "transversal search supports at most " + std::to_string(kMaxMaskEdges) + " edges");
  }
  return HittingSetSearch(h, limits).run();
}

int game_value(const GameState& s, const SolveLimits& limits, const SolverOptions& options) {
  GameSolver solver(s.shared_hypergraph(), limits, options);
  return solver.value(s);
}

VertexId best_move(const GameState& s, const SolveLimits& limits, const SolverOptions& options) {
  GameSolver solver(s.shared_hypergraph(), limits, options);
  return solver.best_move(s);
}

GameNumbers solve_numbers(std::shared_ptr<const Hypergraph> h, const SolveLimits& limits,
                          const SolverOptions& options) {
  GameNumbers out;
  out.tau = transversal_number(*h, limits);
  GameSolver solver(h, limits, options);
  out.tau_g = solver.value(h->all_edges(), PlayerRole::EdgeHitter);
  out.tau_g_prime = solver.value(h->all_edges(), PlayerRole::Staller);
  out.memo_entries = solver.memo_entries();
  return out;
}

}  // namespace tgame
