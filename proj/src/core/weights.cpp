#include "weights.hpp"

#include <array>
#include <string>

#include "error.hpp"

namespace tgame {

std::string_view color_name(Color c) {
  switch (c) {
    case Color::White: return "white";
    case Color::Yellow: return "yellow";
    case Color::Green: return "green";
    case Color::Blue: return "blue";
    case Color::Red: return "red";
  }
  return "?";
}

Color color_of(int residual_degree, WeightScheme scheme) {
  if (residual_degree <= 0) return Color::Red;
  if (residual_degree == 1) return Color::Blue;
  if (residual_degree == 2) return Color::Green;
  if (scheme == WeightScheme::Uniform4 && residual_degree == 3) return Color::Yellow;
  return Color::White;
}

Color color_of(VertexId v, const ResidualView& r, WeightScheme scheme) {
  return color_of(r.degree(v), scheme);
}

DeltaBand band_of(int delta_star) {
  if (delta_star >= 5) return DeltaBand::AtLeast5;
  if (delta_star == 4) return DeltaBand::Four;
  if (delta_star == 3) return DeltaBand::Three;
  return DeltaBand::AtMost2;
}

long long vertex_weight3(Color c) {
  switch (c) {
    case Color::White: return scheme3::kWhite;
    case Color::Green: return scheme3::kGreen;
    case Color::Blue: return scheme3::kBlue;
    case Color::Red: return 0;
    case Color::Yellow: break;
  }
  throw Error(ErrorCode::InvalidArgument, "yellow is not a color of the 3-uniform scheme");
}

long long vertex_weight4(Color c, DeltaBand band) {
  // Rows white, yellow, green, blue; columns >=5, 4, 3, <=2. Zero marks a
  // cell that cannot occur.
  static constexpr std::array<std::array<long long, 4>, 4> kTable{{
      {852, 852, 0, 0},
      {852, 845, 845, 0},
      {852, 838, 750, 750},
      {852, 831, 655, 543},
  }};
  if (c == Color::Red) return 0;
  const auto row = static_cast<std::size_t>(c);
  const auto column = static_cast<std::size_t>(band);
  const long long w = kTable[row][column];
  if (w == 0) {
    throw Error(ErrorCode::UnreachableCell,
                std::string("no weight for a ") + std::string(color_name(c)) +
                    " vertex in delta* band " + std::to_string(column));
  }
  return w;
}

namespace {

void require_uniform(const ResidualView& r, int k) {
  const auto u = r.uniformity();
  if (u && *u != k) {
    throw Error(ErrorCode::NotUniform, "residual hypergraph is not " + std::to_string(k) + "-uniform");
  }
  if (!u && r.edge_count() > 0) {
    throw Error(ErrorCode::NotUniform, "residual hypergraph is not " + std::to_string(k) + "-uniform");
  }
}

}  // namespace

long long weight3(const ResidualView& r) {
  require_uniform(r, 3);
  long long total = scheme3::kEdge * r.edge_count();
  for (int d : r.degrees()) total += vertex_weight3(color_of(d, WeightScheme::Uniform3));
  return total;
}

long long weight4(const ResidualView& r, int delta_star) {
  require_uniform(r, 4);
  const DeltaBand band = band_of(delta_star);
  long long total = scheme4::kEdge * r.edge_count();
  for (int d : r.degrees()) total += vertex_weight4(color_of(d, WeightScheme::Uniform4), band);
  return total;
}

DeltaStarTracker::DeltaStarTracker(const GameState& start)
    : value_(start.residual().max_degree()) {}

void DeltaStarTracker::advance(const GameState& after) {
  if (after.to_move() == PlayerRole::EdgeHitter) value_ = after.residual().max_degree();
}

long long bound_rhs_3A(const Hypergraph& h) {
  const StructureSummary s = structure_queries(h);
  if (s.uniformity != 3 && h.size() > 0) {
    throw Error(ErrorCode::NotUniform, "hypergraph is not 3-uniform");
  }
  long long n3 = 0, n2 = 0, n1 = 0;
  for (int d : s.degrees) {
    if (d >= 3) {
      ++n3;
    } else if (d == 2) {
      ++n2;
    } else if (d == 1) {
      ++n1;
    }
  }
  return 15 * n3 + 14 * n2 + 11 * n1 + 15LL * h.size();
}

WeightMeter::WeightMeter(WeightScheme scheme, const GameState& start)
    : scheme_(scheme), tracker_(start), current_(0) {
  current_ = measure(start);
}

long long WeightMeter::measure(const GameState& s) const {
  const ResidualView r = s.residual();
  return scheme_ == WeightScheme::Uniform3 ? weight3(r) : weight4(r, tracker_.value());
}

long long WeightMeter::advance(const GameState& after) {
  tracker_.advance(after);
  const long long next = measure(after);
  const long long decrease = current_ - next;
  current_ = next;
  return decrease;
}

}  // namespace tgame
