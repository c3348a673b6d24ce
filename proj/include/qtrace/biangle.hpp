#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtrace/ribbon.hpp"

namespace qtrace {

// Along the biangle's first coordinate: Right runs from the left side to the right side.
enum class Dir { Right, Left };
inline Dir flip(Dir d) { return d == Dir::Right ? Dir::Left : Dir::Right; }

struct Slice {
  enum class Type { UTurn, Crossing, Kink, Trivial };
  Type type;
  int pos;
  UTurnKind uturn{true, true};
  CrossingKind crossing{true, true, true};
  bool positive_kink = true;
  Dir orientation = Dir::Right;

  static Slice make_uturn(int pos, UTurnKind k) { return {Type::UTurn, pos, k}; }
  static Slice make_crossing(int pos, CrossingKind k) { return {Type::Crossing, pos, {true, true}, k}; }
  static Slice make_kink(int pos, bool positive) { return {Type::Kink, pos, {true, true}, {true, true, true}, positive}; }
  static Slice make_trivial(int pos, Dir d) { return {Type::Trivial, pos, {true, true}, {true, true, true}, true, d}; }
};

// Positions count strands at a cut from the lowest (smallest height) up.
struct BiangleDiagram {
  std::vector<Dir> left;
  std::vector<Slice> slices;
};

// Kind of the crossing of the strand starting at the lower left position p
// (A) with the one starting at p+1 (B), given their orientations and which is over.
CrossingKind crossing_kind_from(Dir a, Dir b, bool a_over);

// Strand orientations at every cut, validating each slice; throws Error on the
// first inconsistency.
std::vector<std::vector<Dir>> cuts(const BiangleDiagram& d);
std::vector<Dir> right_boundary(const BiangleDiagram& d);

using StateVector = std::vector<int>;
// Nonzero entries keyed by (left states, right states); states are 1..n.
using BiangleTensor = std::map<std::pair<StateVector, StateVector>, RootScalar>;

BiangleTensor biangle_tensor(const BiangleDiagram& d, int n);
RootScalar biangle_trace(const BiangleDiagram& d, int n, const StateVector& left, const StateVector& right);

// The same link described with the biangle's parametrization turned around:
// sides exchanged and boundary orderings restored by horizontal slides.
// States carry over: left of the result is the right of the input.
BiangleDiagram turn_around(const BiangleDiagram& d);

// Diagram for two biangles glued along a shared side (a then b).
BiangleDiagram concatenate(const BiangleDiagram& a, const BiangleDiagram& b);

struct SkeinReport {
  bool homflypt;
  bool unknot;
  bool kinks_cancel;
  bool curl_matches_kink;
  std::string detail;
  bool all() const { return homflypt && unknot && kinks_cancel && curl_matches_kink; }
};
SkeinReport skein_checks(int n);

}  // namespace qtrace
