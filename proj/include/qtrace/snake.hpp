#pragma once

#include <functional>
#include <vector>

#include "qtrace/matrix.hpp"
#include "qtrace/quiver.hpp"

namespace qtrace {

enum class ElementaryKind { Edge, Left, Right };
enum class Turn { Left, Right };

// Entries are single monomials in generator `var` (ignored when j = 1 for
// the triangle kinds); var < 0 means no variable.
TorusMatrix elementary_matrix(ElementaryKind kind, int n, int j, int var, const SpecPtr& spec);

TorusMatrix edge_matrix(const std::vector<int>& z, const SpecPtr& spec);
TorusMatrix left_matrix(const std::function<int(const Vertex&)>& x, const SpecPtr& spec);
TorusMatrix right_matrix(const std::function<int(const Vertex&)>& x, const SpecPtr& spec);
// Antidiagonal, reading +1, -1, ... from bottom-left to top-right.
TorusMatrix uturn_classical(int n, bool clockwise, const SpecPtr& spec);

// Generator assignment for one arc crossing a triangle.
struct TurnLabels {
  std::vector<int> entry;                      // Z_1..Z_{n-1} of the entry edge
  std::vector<int> exit;                       // dots of the exit edge
  std::function<int(const Vertex&)> interior;  // standard interior position -> generator
};

// Labels for an arc entering through `entry_side` of a triangle whose local
// dot (a,b,c) is generator `index(a,b,c)`.
TurnLabels arc_labels(const DiscreteTriangle& t, Turn turn, int entry_side,
                      const std::function<int(const Vertex&)>& index);
int exit_side(Turn turn, int entry_side);

TorusMatrix classical_turn_matrix(Turn turn, const TurnLabels& labels, const SpecPtr& commutative_spec);
TorusMatrix quantum_turn_matrix(Turn turn, const TurnLabels& labels, const SpecPtr& spec);

// n = 3 closed forms as functions of (W, Z, W', Z', X): L enters the edge
// (W, Z) and leaves through (W', Z'); R enters (W', Z') and leaves through (W, Z).
TorusMatrix quantum_left5(const SpecPtr& spec, int W, int Z, int Wp, int Zp, int X);
TorusMatrix quantum_right5(const SpecPtr& spec, int W, int Z, int Wp, int Zp, int X);

}  // namespace qtrace
