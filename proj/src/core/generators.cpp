#include "generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "error.hpp"

namespace tgame {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  return result;
}

namespace {

std::vector<VertexId> random_subset(Rng& rng, int n, int k) {
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

bool overlaps(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  int shared = 0;
  for (VertexId v : a) shared += std::binary_search(b.begin(), b.end(), v) ? 1 : 0;
  return shared >= 2;
}

}  // namespace

Hypergraph random_k_uniform(const GenSpec& spec) {
  if (spec.k < 1 || spec.n < spec.k || spec.m < 0) {
    throw Error(ErrorCode::Unsatisfiable, "need 1 <= k <= n and m >= 0");
  }
  if (static_cast<std::uint64_t>(spec.m) > binomial(spec.n, spec.k)) {
    throw Error(ErrorCode::Unsatisfiable,
                "m = " + std::to_string(spec.m) + " exceeds C(" + std::to_string(spec.n) + "," +
                    std::to_string(spec.k) + ") = " +
                    std::to_string(binomial(spec.n, spec.k)));
  }
  Rng rng(spec.seed);
  const int tries_per_edge = 64 + 4 * spec.m;
  for (int attempt = 0; attempt <= spec.max_retries; ++attempt) {
    std::vector<std::vector<VertexId>> edges;
    std::set<std::vector<VertexId>> seen;
    std::vector<int> degree(static_cast<std::size_t>(spec.n), 0);
    bool stuck = false;
    while (static_cast<int>(edges.size()) < spec.m && !stuck) {
      stuck = true;
      for (int t = 0; t < tries_per_edge; ++t) {
        std::vector<VertexId> e = random_subset(rng, spec.n, spec.k);
        if (seen.count(e)) continue;
        if (spec.max_degree &&
            std::any_of(e.begin(), e.end(), [&](VertexId v) {
              return degree[static_cast<std::size_t>(v)] >= *spec.max_degree;
            })) {
          continue;
        }
        if (spec.linear &&
            std::any_of(edges.begin(), edges.end(), [&](const auto& f) { return overlaps(e, f); })) {
          continue;
        }
        for (VertexId v : e) ++degree[static_cast<std::size_t>(v)];
        seen.insert(e);
        edges.push_back(std::move(e));
        stuck = false;
        break;
      }
    }
    if (!stuck) return Hypergraph::build(spec.n, edges);
  }
  throw Error(ErrorCode::Unsatisfiable, "retry budget exhausted for the requested constraints");
}

SmallEnumerator::SmallEnumerator(int n_max, int m_max, int k, std::uint64_t max_instances)
    : n_(n_max), m_max_(m_max) {
  if (k < 1 || n_max < 0 || m_max < 0) {
    throw Error(ErrorCode::InvalidArgument, "enumeration needs k >= 1, n >= 0, m >= 0");
  }
  const std::uint64_t universe = binomial(n_max, k);
  if (universe > 4096) {
    throw Error(ErrorCode::LimitExceeded, "C(n, k) too large to enumerate");
  }
  for (int m = 1; m <= m_max; ++m) {
    const std::uint64_t c = binomial(static_cast<int>(universe), m);
    if (c > max_instances || total_ > max_instances - c) {
      throw Error(ErrorCode::LimitExceeded,
                  "enumeration exceeds " + std::to_string(max_instances) + " instances");
    }
    total_ += c;
  }
  if (universe > 0 && k <= n_max) {
    std::vector<VertexId> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      universe_.push_back(pick);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n_max - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
}

std::optional<Hypergraph> SmallEnumerator::next() {
  if (done_) return std::nullopt;
  const std::size_t universe = universe_.size();
  if (!started_) {
    started_ = true;
    if (universe == 0 || m_max_ < 1) {
      done_ = true;
      return std::nullopt;
    }
    pick_ = {0};
  } else if (static_cast<int>(pick_.size()) < m_max_ && pick_.back() + 1 < universe) {
    pick_.push_back(pick_.back() + 1);
  } else {
    while (!pick_.empty()) {
      if (++pick_.back() < universe) break;
      pick_.pop_back();
    }
    if (pick_.empty()) {
      done_ = true;
      return std::nullopt;
    }
  }
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(pick_.size());
  for (std::size_t idx : pick_) edges.push_back(universe_[idx]);
  return Hypergraph::build(n_, edges);
}

std::vector<Hypergraph> enumerate_small(int n_max, int m_max, int k) {
  SmallEnumerator gen(n_max, m_max, k);
  std::vector<Hypergraph> out;
  while (auto h = gen.next()) out.push_back(std::move(*h));
  return out;
}

std::vector<CorpusEntry> random_corpus(int k, int count, int n_max, int m_max,
                                       std::uint64_t base_seed) {
  if (n_max < k || m_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "random corpus needs n_max >= k and m_max >= 1");
  }
  std::vector<CorpusEntry> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    Rng shape(seed ^ 0xA5A5A5A5A5A5A5A5ULL);
    GenSpec spec;
    spec.k = k;
    spec.n = k + static_cast<int>(uniform_below(shape, static_cast<std::uint64_t>(n_max - k + 1)));
    const std::uint64_t cap =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(m_max), binomial(spec.n, k));
    spec.m = 1 + static_cast<int>(uniform_below(shape, cap));
    spec.seed = seed;
    out.push_back({"random_k" + std::to_string(k), seed, random_k_uniform(spec)});
  }
  return out;
}

}  // namespace tgame
