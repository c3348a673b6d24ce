#pragma once

#include <vector>

#include "qtrace/scalar.hpp"

namespace qtrace {

struct Incidence {
  int triangle;
  int side;  // side s of a triangle is where its s-th discrete coordinate vanishes
  friend bool operator==(const Incidence& a, const Incidence& b) {
    return a.triangle == b.triangle && a.side == b.side;
  }
};

struct EdgeRecord {
  int id;
  std::vector<Incidence> incidences;
  bool boundary = false;
  // Boundary edges only: the biangle's first side faces the surface boundary
  // instead of the triangle.
  bool triangle_on_right = false;
};

// Ideal triangulation without self-folded triangles. Each edge is split into a
// biangle whose left side is glued to incidences[0] (for boundary edges, to the
// triangle unless triangle_on_right) and whose right side to incidences[1].
class IdealTriangulation {
 public:
  IdealTriangulation(int triangle_count, std::vector<EdgeRecord> edges);

  int triangle_count() const { return triangles_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const EdgeRecord& edge(int id) const;
  int edge_index(int id) const;
  // Edge id on side s of triangle t.
  int edge_at(int t, int s) const { return side_edge_[t * 3 + s]; }
  // The other incidence of the edge on side s of t; triangle -1 on the boundary.
  Incidence across(int t, int s) const;
  // Which side of the split biangle faces (t, s): 0 left, 1 right.
  int biangle_side(int t, int s) const;

  int internal_edge_count() const;
  int puncture_count() const;

 private:
  int triangles_;
  std::vector<EdgeRecord> edges_;
  std::vector<int> side_edge_;
};

struct SplitBiangle {
  int edge_id;
  Incidence left;   // triangle -1 when that side is the surface boundary
  Incidence right;
};

struct SplitModel {
  std::vector<SplitBiangle> biangles;
  int triangle_count;
};

SplitModel split_triangulation(const IdealTriangulation& t);
IdealTriangulation forget_split(const SplitModel& s);

}  // namespace qtrace
