#include "qtrace/triangulation.hpp"

#include <numeric>
#include <set>
#include <string>

namespace qtrace {

IdealTriangulation::IdealTriangulation(int triangle_count, std::vector<EdgeRecord> edges)
    : triangles_(triangle_count), edges_(std::move(edges)), side_edge_(static_cast<size_t>(triangle_count) * 3, -1) {
  if (triangle_count < 1) throw Error("triangulation needs at least one triangle");
  std::set<int> ids;
  for (const EdgeRecord& e : edges_) {
    std::string tag = "edge " + std::to_string(e.id) + ": ";
    if (!ids.insert(e.id).second) throw Error(tag + "duplicate edge id");
    if (e.incidences.empty() || e.incidences.size() > 2) throw Error(tag + "must have one or two incidences");
    if (e.boundary != (e.incidences.size() == 1)) throw Error(tag + "boundary flag disagrees with incidence count");
    if (e.triangle_on_right && !e.boundary) throw Error(tag + "only boundary edges choose their biangle side");
    for (const Incidence& in : e.incidences) {
      if (in.triangle < 0 || in.triangle >= triangle_count) throw Error(tag + "refers to a missing triangle");
      if (in.side < 0 || in.side > 2) throw Error(tag + "side must be 0, 1 or 2");
      int& slot = side_edge_[in.triangle * 3 + in.side];
      if (slot != -1) throw Error(tag + "triangle side already used by another edge");
      slot = e.id;
    }
    if (e.incidences.size() == 2 && e.incidences[0].triangle == e.incidences[1].triangle)
      throw Error(tag + "glues a triangle to itself (self-folded configuration)");
  }
  for (int t = 0; t < triangle_count; ++t)
    for (int s = 0; s < 3; ++s)
      if (side_edge_[t * 3 + s] == -1)
        throw Error("triangle " + std::to_string(t) + " side " + std::to_string(s) + " has no edge");
}

int IdealTriangulation::edge_index(int id) const {
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return static_cast<int>(i);
  throw Error("unknown edge id " + std::to_string(id));
}

const EdgeRecord& IdealTriangulation::edge(int id) const { return edges_[edge_index(id)]; }

Incidence IdealTriangulation::across(int t, int s) const {
  const EdgeRecord& e = edge(edge_at(t, s));
  if (e.boundary) return {-1, -1};
  return e.incidences[0] == Incidence{t, s} ? e.incidences[1] : e.incidences[0];
}

int IdealTriangulation::biangle_side(int t, int s) const {
  const EdgeRecord& e = edge(edge_at(t, s));
  if (e.boundary) return e.triangle_on_right ? 1 : 0;
  return e.incidences[0] == Incidence{t, s} ? 0 : 1;
}

int IdealTriangulation::internal_edge_count() const {
  int c = 0;
  for (const EdgeRecord& e : edges_) c += e.boundary ? 0 : 1;
  return c;
}

int IdealTriangulation::puncture_count() const {
  // Side s runs counterclockwise from corner (s+2)%3 to corner (s+1)%3;
  // gluing reverses the direction.
  std::vector<int> parent(static_cast<size_t>(triangles_) * 3);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const EdgeRecord& e : edges_) {
    if (e.incidences.size() != 2) continue;
    Incidence a = e.incidences[0], b = e.incidences[1];
    join(a.triangle * 3 + (a.side + 2) % 3, b.triangle * 3 + (b.side + 1) % 3);
    join(a.triangle * 3 + (a.side + 1) % 3, b.triangle * 3 + (b.side + 2) % 3);
  }
  std::set<int> roots;
  for (int c = 0; c < triangles_ * 3; ++c) roots.insert(find(c));
  return static_cast<int>(roots.size());
}

SplitModel split_triangulation(const IdealTriangulation& t) {
  SplitModel m{{}, t.triangle_count()};
  for (const EdgeRecord& e : t.edges()) {
    SplitBiangle b{e.id, e.incidences[0], {-1, -1}};
    if (!e.boundary)
      b.right = e.incidences[1];
    else if (e.triangle_on_right)
      std::swap(b.left, b.right);
    m.biangles.push_back(b);
  }
  return m;
}

IdealTriangulation forget_split(const SplitModel& s) {
  std::vector<EdgeRecord> edges;
  for (const SplitBiangle& b : s.biangles) {
    EdgeRecord e{b.edge_id, {}, false, false};
    if (b.left.triangle >= 0) e.incidences.push_back(b.left);
    if (b.right.triangle >= 0) e.incidences.push_back(b.right);
    e.boundary = e.incidences.size() == 1;
    e.triangle_on_right = e.boundary && b.left.triangle < 0;
    edges.push_back(e);
  }
  return IdealTriangulation(s.triangle_count, edges);
}

}  // namespace qtrace
