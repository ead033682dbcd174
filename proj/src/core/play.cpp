#include "play.hpp"

#include <charconv>
#include <sstream>

#include "error.hpp"
#include "strategies.hpp"
#include "weights.hpp"

namespace tgame {

namespace {

std::optional<WeightScheme> scheme_for(const Hypergraph& h) {
  if (h.size() == 0) return std::nullopt;
  const auto k = structure_queries(h).uniformity;
  if (k == 3) return WeightScheme::Uniform3;
  if (k == 4) return WeightScheme::Uniform4;
  return std::nullopt;
}

std::string describe(const GameState& s, const std::optional<WeightMeter>& meter) {
  const ResidualView r = s.residual();
  std::ostringstream out;
  out << "uncovered:";
  for (EdgeId e : r.uncovered_edges()) {
    out << " e" << e << "={";
    const Edge& edge = s.hypergraph().edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i) out << (i ? "," : "") << edge[i];
    out << '}';
  }
  out << "\ndegrees:";
  for (VertexId v : r.active_vertices()) {
    out << ' ' << v << ':' << r.degree(v);
    if (meter) out << '(' << color_name(color_of(r.degree(v), meter->scheme())) << ')';
  }
  out << "\nlegal:";
  for (VertexId v : legal_moves(s)) out << ' ' << v;
  out << '\n';
  if (meter) {
    out << "weight: " << meter->current();
    if (meter->scheme() == WeightScheme::Uniform4) out << " (delta*=" << meter->delta_star() << ')';
    out << '\n';
  }
  return out.str();
}

// nullopt with `reason` set when the line is not an acceptable move.
std::optional<VertexId> read_move(const GameState& s, std::string_view line, std::string& reason) {
  const std::size_t a = line.find_first_not_of(" \t\r");
  const std::size_t b = line.find_last_not_of(" \t\r");
  if (a == std::string_view::npos) {
    reason = "enter a vertex id";
    return std::nullopt;
  }
  const std::string_view token = line.substr(a, b - a + 1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    reason = "not a vertex id";
    return std::nullopt;
  }
  if (v < 0 || v >= s.hypergraph().order()) {
    reason = "no such vertex";
    return std::nullopt;
  }
  if (!s.is_legal(static_cast<VertexId>(v))) {
    reason = "hits no uncovered edge";
    return std::nullopt;
  }
  return static_cast<VertexId>(v);
}

}  // namespace

PlayOutcome play_session(std::shared_ptr<const Hypergraph> h, const PlayOptions& options,
                         const LineReader& read, const TextWriter& write) {
  const PlayerRole engine_role = opponent(options.human);
  if ((options.engine == "eh3" || options.engine == "eh4") && engine_role != PlayerRole::EdgeHitter) {
    throw Error(ErrorCode::InvalidArgument, options.engine + " can only play Edge-hitter");
  }
  std::unique_ptr<Strategy> engine = make_strategy(options.engine, std::nullopt, options.limits);

  GameState s(h, options.first);
  std::optional<WeightMeter> meter;
  if (auto scheme = scheme_for(*h)) meter.emplace(*scheme, s);

  PlayOutcome outcome;
  outcome.transcript = transcript_of(s);
  if (meter) {
    outcome.transcript.scheme = static_cast<int>(meter->scheme());
    outcome.transcript.initial_weight = meter->current();
  }

  write("you play " + std::string(role_name(options.human)) + "; engine " + engine->name() +
        " plays " + std::string(role_name(engine_role)) + "\n");
  while (!s.is_terminal()) {
    TranscriptMove tm;
    tm.index = s.length();
    tm.player = s.to_move();
    if (s.to_move() == options.human) {
      write(describe(s, meter));
      std::optional<VertexId> move;
      while (!move) {
        write("move " + std::to_string(s.length() + 1) + " (" + std::string(role_name(s.to_move())) + ")> ");
        const std::optional<std::string> line = read();
        if (!line) {
          write("\ninput ended; game aborted after " + std::to_string(s.length()) + " moves\n");
          outcome.aborted = true;
          outcome.transcript.final_covered = edges_of(s.covered());
          if (meter) outcome.transcript.final_weight = meter->current();
          return outcome;
        }
        std::string reason;
        move = read_move(s, *line, reason);
        if (!move) write("illegal: " + reason + "\n");
      }
      tm.vertex = *move;
      tm.rule = "human";
    } else {
      const Decision d = engine->choose(s);
      tm.vertex = d.vertex;
      tm.rule = d.rule;
      tm.flagged = d.flagged;
      write("engine plays " + std::to_string(d.vertex) + "\n");
    }
    GameState next = s.apply(tm.vertex);
    tm.newly_covered = edges_of(next.history().back().newly_covered);
    if (meter) tm.weight_decrease = meter->advance(next);
    outcome.transcript.moves.push_back(std::move(tm));
    s = std::move(next);
  }
  outcome.transcript.final_covered = edges_of(s.covered());
  outcome.transcript.complete = true;
  if (meter) outcome.transcript.final_weight = meter->current();

  const std::string label = options.first == PlayerRole::EdgeHitter ? "tau_g" : "tau_g_prime";
  std::string summary = "game over after " + std::to_string(s.length()) + " moves; ";
  try {
    outcome.optimal = game_value(GameState(h, options.first), options.limits);
    summary += label + "=" + std::to_string(*outcome.optimal);
    const int diff = s.length() - *outcome.optimal;
    summary += diff == 0 ? " (optimal length)" : diff > 0 ? " (Staller gained " + std::to_string(diff) + ")"
                                                          : " (Edge-hitter gained " + std::to_string(-diff) + ")";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LimitExceeded) throw;
    summary += label + " unknown (" + e.what() + ")";
  }
  write(summary + "\n");
  return outcome;
}

}  // namespace tgame
