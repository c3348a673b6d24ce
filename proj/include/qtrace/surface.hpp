#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtrace/biangle.hpp"
#include "qtrace/snake.hpp"
#include "qtrace/triangulation.hpp"

namespace qtrace {

// Tensor product of one triangle torus per triangle, together with the glued
// torus in which the two copies of each internal edge dot are identified.
class SurfaceTorusSpec {
 public:
  SurfaceTorusSpec(IdealTriangulation t, int n);

  int n() const { return triangle_.n(); }
  const IdealTriangulation& triangulation() const { return tri_; }
  const DiscreteTriangle& triangle() const { return triangle_; }
  const SpecPtr& tensor() const { return tensor_; }
  const SpecPtr& glued() const { return glued_; }

  int tensor_index(int t, const Vertex& v) const { return t * triangle_.size() + triangle_.index(v); }
  int glued_index(int t, const Vertex& v) const { return glued_of_[tensor_index(t, v)]; }
  int glued_of(int tensor_index) const { return glued_of_[tensor_index]; }
  const std::vector<int>& copies(int glued) const { return copies_[glued]; }

  // Rewrites an element of the tensor algebra in glued generators; throws
  // Error naming the monomial when paired edge-dot exponents disagree.
  TorusElement project(const TorusElement& x) const;

 private:
  IdealTriangulation tri_;
  DiscreteTriangle triangle_;
  SpecPtr tensor_;
  SpecPtr glued_;
  std::vector<int> glued_of_;
  std::vector<std::vector<int>> copies_;
};

SurfaceTorusSpec build_surface(const IdealTriangulation& t, int n);

struct TriangleArc {
  int triangle;
  int entry_side;
  int exit_side;
  Turn turn;
  int height;  // rank among the arcs of the same triangle
};

struct GoodPositionLink {
  std::vector<TriangleArc> arcs;
  // Keyed by edge id. A missing edge carries trivial strands only.
  std::map<int, BiangleDiagram> biangles;
  // States on surface-boundary endpoints, keyed by boundary edge id, by height.
  std::map<int, StateVector> boundary_states;
};

// One endpoint of a triangle arc on a triangle side.
struct ArcEnd {
  int arc;
  bool exit;
};

// Arc endpoints on side s of triangle t, ordered by increasing height.
std::vector<ArcEnd> side_endpoints(const GoodPositionLink& link, int t, int s);

struct Diagnostics {
  bool ok = true;
  std::string message;
};

// With require_states false, boundary states are not checked (tensor mode).
Diagnostics validate_good_position(const GoodPositionLink& link, const IdealTriangulation& t, int n,
                                   bool require_states = true);

struct TracePolynomial {
  TorusElement tensor;
  std::optional<TorusElement> glued;
};

// Throws Error carrying the first diagnostic when the link is not in good position.
TracePolynomial quantum_trace(const GoodPositionLink& link, const SurfaceTorusSpec& s);

// The trace for every assignment of boundary states, in the tensor algebra.
// Keys concatenate the states on each boundary edge, edges in list order.
std::map<StateVector, TorusElement> boundary_trace_tensor(const GoodPositionLink& link, const SurfaceTorusSpec& s);

enum class StepTurn { Left, Right, UTurnCW, UTurnCCW };

struct CurveStep {
  int edge;      // edge crossed to enter the triangle
  int triangle;  // triangle entered
  StepTurn turn;
  int turns = 0;  // full turns to the right after pulling tight
};

struct CurveDescription {
  std::vector<CurveStep> steps;
};

// Trace of the product of edge and turn matrices along a closed curve, in
// the commutative glued algebra.
TorusElement classical_trace_polynomial(const CurveDescription& c, const SurfaceTorusSpec& s);

}  // namespace qtrace
