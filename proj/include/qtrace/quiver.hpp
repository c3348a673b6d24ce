#pragma once

#include <array>
#include <map>
#include <vector>

#include "qtrace/torus.hpp"

namespace qtrace {

using Vertex = std::array<int, 3>;

// Theta_n minus its corners, in lexicographic order of (a,b,c).
class DiscreteTriangle {
 public:
  explicit DiscreteTriangle(int n);
  int n() const { return n_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int index(const Vertex& v) const;
  bool contains(const Vertex& v) const { return lookup_.count(v) != 0; }
  static bool interior(const Vertex& v) { return v[0] > 0 && v[1] > 0 && v[2] > 0; }

  // Side s is where coordinate s vanishes. Dots of a side are numbered as
  // seen from inside the triangle by an arc leaving (exit) or entering it.
  Vertex exit_dot(int side, int j) const;
  Vertex entry_dot(int side, int j) const { return exit_dot(side, n_ - j); }

 private:
  int n_;
  std::vector<Vertex> vertices_;
  std::map<Vertex, int> lookup_;
};

// (a,b,c) -> (c,a,b); carries side 1 to side 2, side 2 to side 0, side 0 to side 1.
Vertex rotate(const Vertex& v, int times = 1);
int rotate_side(int side, int times = 1);

struct TriangleTorusSpec {
  DiscreteTriangle triangle;
  SpecPtr spec;
  int index(const Vertex& v) const { return triangle.index(v); }
};

std::vector<int> quiver_matrix(int n);
TriangleTorusSpec triangle_poisson(int n);

}  // namespace qtrace
