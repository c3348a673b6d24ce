#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtrace/formats.hpp"
#include "qtrace/quiver.hpp"
#include "qtrace/surface.hpp"

namespace support {

using namespace qtrace;

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& name) {
  return read_text(std::string(QTRACE_FIXTURES) + "/" + name);
}

// Two triangles glued side to side: the once-punctured torus.
inline IdealTriangulation punctured_torus() {
  std::vector<EdgeRecord> e;
  for (int s = 0; s < 3; ++s) e.push_back({s, {{0, s}, {1, s}}, false, false});
  return IdealTriangulation(2, e);
}

// One triangle whose three sides are boundary edges with the triangle on the
// left of each biangle, except for the sides listed in `on_right`.
inline IdealTriangulation lone_triangle(std::vector<int> on_right = {}) {
  std::vector<EdgeRecord> e;
  for (int s = 0; s < 3; ++s) {
    bool r = false;
    for (int x : on_right) r |= x == s;
    e.push_back({s, {{0, s}}, true, r});
  }
  return IdealTriangulation(1, e);
}

inline Turn turn_between(int from, int to) {
  return exit_side(Turn::Left, from) == to ? Turn::Left : Turn::Right;
}

inline TriangleArc arc(int triangle, int from, int to, int height) {
  return {triangle, from, to, turn_between(from, to), height};
}

// Weyl-ordered monomial with exponents in units of 1/n.
inline TorusElement weyl(const SpecPtr& spec, const std::vector<std::pair<int, int>>& exps) {
  Monomial m(spec->size(), 0);
  for (auto [i, k] : exps) m[i] += k;
  return weyl_monomial(m, spec);
}

// Closed curves on the punctured torus, each with a second good position.
struct KnotFixture {
  std::string name;
  GoodPositionLink first;
  GoodPositionLink second;
  CurveDescription curve;
};

inline std::vector<KnotFixture> torus_knots() {
  IdealTriangulation t = punctured_torus();
  auto load = [&](const std::string& f) { return parse_link(fixture(f), t); };
  CurveDescription lr{{{1, 1, StepTurn::Left}, {2, 0, StepTurn::Right}}};
  CurveDescription per;
  for (auto [edge, tri] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {2, 1}, {0, 0}, {1, 1}, {2, 0}})
    per.steps.push_back({edge, tri, StepTurn::Left});
  return {{"left-right curve", load("lr.link.yaml"), load("lr_moved.link.yaml"), lr},
          {"peripheral curve", load("peripheral.link.yaml"), load("peripheral_moved.link.yaml"), per}};
}

}  // namespace support
