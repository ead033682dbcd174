#pragma once

#include <string_view>

#include "game.hpp"
#include "hypergraph.hpp"

namespace tgame {

// Vertex classes by residual degree. The 3-uniform scheme never produces
// Yellow.
enum class Color { White, Yellow, Green, Blue, Red };

enum class WeightScheme { Uniform3 = 3, Uniform4 = 4 };

std::string_view color_name(Color c);

Color color_of(int residual_degree, WeightScheme scheme);
Color color_of(VertexId v, const ResidualView& r, WeightScheme scheme);

namespace scheme3 {
inline constexpr long long kWhite = 15;  // degree >= 3
inline constexpr long long kGreen = 14;  // degree 2
inline constexpr long long kBlue = 11;   // degree 1
inline constexpr long long kEdge = 15;   // uncovered edge
inline constexpr long long kTarget = 48;
// Any legal move recolors at least one vertex and one edge red.
inline constexpr long long kMinMoveDecrease = 26;
}  // namespace scheme3

namespace scheme4 {
inline constexpr long long kEdge = 852;
inline constexpr long long kTarget = 3024;
}  // namespace scheme4

// Column of the 4-uniform table selected by the frozen maximum degree.
enum class DeltaBand { AtLeast5, Four, Three, AtMost2 };
DeltaBand band_of(int delta_star);

long long vertex_weight3(Color c);
// Throws UnreachableCell for the table cells that cannot occur.
long long vertex_weight4(Color c, DeltaBand band);

// 15 per white, 14 per green, 11 per blue vertex plus 15 per uncovered
// edge. Throws NotUniform unless every uncovered edge has 3 vertices.
long long weight3(const ResidualView& r);
// Column chosen by delta_star; 852 per uncovered edge. Throws NotUniform
// unless every uncovered edge has 4 vertices.
long long weight4(const ResidualView& r, int delta_star);

// Maximum residual degree, frozen across Staller's turn: while Staller is to
// move it keeps the value it had before Edge-hitter's previous move. At the
// start of a game it is the current maximum degree whoever moves first.
class DeltaStarTracker {
 public:
  explicit DeltaStarTracker(const GameState& start);

  int value() const { return value_; }
  // Call with the position reached after each move.
  void advance(const GameState& after);

 private:
  int value_;
};

// 15 n_{>=3} + 14 n_2 + 11 n_1 + 15 m from the degree census of h.
// Throws NotUniform unless h is 3-uniform.
long long bound_rhs_3A(const Hypergraph& h);

// Tracks the potential of a running game under one scheme, including the
// frozen maximum degree for the 4-uniform scheme.
class WeightMeter {
 public:
  WeightMeter(WeightScheme scheme, const GameState& start);

  WeightScheme scheme() const { return scheme_; }
  long long current() const { return current_; }
  int delta_star() const { return tracker_.value(); }
  // Returns the decrease caused by the move that produced `after`.
  long long advance(const GameState& after);

 private:
  long long measure(const GameState& s) const;

  WeightScheme scheme_;
  DeltaStarTracker tracker_;
  long long current_;
};

}  // namespace tgame
