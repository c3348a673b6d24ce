#include <algorithm>
#include <map>
#include <tuple>

#include "qtrace/surface.hpp"

namespace qtrace {

namespace {

struct Interface {
  BiangleTensor tensor;
  std::vector<int> vars[2];  // endpoint variables on the left and right sides
  bool open[2] = {false, false};  // side faces the surface boundary
  StateVector fixed;
};

// With free_boundary, open sides are summed over and recorded in the key;
// otherwise they are pinned to the link's boundary states and the key is empty.
std::map<StateVector, TorusElement> state_sum(const GoodPositionLink& link, const SurfaceTorusSpec& s,
                                              bool free_boundary) {
  const IdealTriangulation& tri = s.triangulation();
  int n = s.n();
  Diagnostics d = validate_good_position(link, tri, n, !free_boundary);
  if (!d.ok) throw Error("link not in good position: " + d.message);

  std::map<std::tuple<int, int, int>, TorusMatrix> cache;
  std::vector<const TorusMatrix*> mats;
  for (const TriangleArc& a : link.arcs) {
    auto key = std::make_tuple(a.triangle, static_cast<int>(a.turn), a.entry_side);
    auto it = cache.find(key);
    if (it == cache.end()) {
      int t = a.triangle;
      TurnLabels l = arc_labels(s.triangle(), a.turn, a.entry_side,
                                [&s, t](const Vertex& v) { return s.tensor_index(t, v); });
      it = cache.emplace(key, quantum_turn_matrix(a.turn, l, s.tensor())).first;
    }
    mats.push_back(&it->second);
  }

  std::vector<Interface> faces;
  for (const SplitBiangle& b : split_triangulation(tri).biangles) {
    Interface f;
    Incidence side[2] = {b.left, b.right};
    std::vector<Dir> dirs;
    for (int k = 0; k < 2; ++k) {
      if (side[k].triangle < 0) {
        f.open[k] = true;
        continue;
      }
      for (const ArcEnd& e : side_endpoints(link, side[k].triangle, side[k].side)) {
        f.vars[k].push_back(2 * e.arc + (e.exit ? 1 : 0));
        if (k == 0 || side[0].triangle < 0) dirs.push_back((e.exit == (k == 0)) ? Dir::Right : Dir::Left);
      }
    }
    auto it = link.biangles.find(b.edge_id);
    f.tensor = biangle_tensor(it != link.biangles.end() ? it->second : BiangleDiagram{dirs, {}}, n);
    if (f.open[0] || f.open[1]) {
      auto st = link.boundary_states.find(b.edge_id);
      if (st != link.boundary_states.end()) f.fixed = st->second;
    }
    faces.push_back(std::move(f));
  }

  // Arcs whose two endpoint states are both known once face k is assigned.
  int A = static_cast<int>(link.arcs.size());
  std::vector<int> done_at(2 * A, -1);
  for (size_t k = 0; k < faces.size(); ++k)
    for (int side = 0; side < 2; ++side)
      for (int v : faces[k].vars[side]) done_at[v] = static_cast<int>(k);
  std::vector<std::vector<int>> complete(faces.size());
  for (int a = 0; a < A; ++a) complete[std::max(done_at[2 * a], done_at[2 * a + 1])].push_back(a);

  std::vector<std::vector<int>> by_triangle(tri.triangle_count());
  {
    std::vector<std::pair<int, int>> order;
    for (int a = 0; a < A; ++a) order.push_back({link.arcs[a].height, a});
    std::sort(order.begin(), order.end());
    for (auto [h, a] : order) by_triangle[link.arcs[a].triangle].push_back(a);
  }
  std::vector<std::map<StateVector, TorusElement>> memo(tri.triangle_count());

  std::vector<int> state(2 * A, 0);
  std::map<StateVector, TorusElement> result;
  StateVector key_states;

  auto leaf = [&](const RootScalar& scalar) {
    TorusElement prod(s.tensor(), scalar);
    for (int t = 0; t < tri.triangle_count(); ++t) {
      StateVector key;
      for (int a : by_triangle[t]) {
        key.push_back(state[2 * a]);
        key.push_back(state[2 * a + 1]);
      }
      auto it = memo[t].find(key);
      if (it == memo[t].end()) {
        TorusElement p(s.tensor(), RootScalar(1));
        for (int a : by_triangle[t]) p = p * (*mats[a])(state[2 * a] - 1, state[2 * a + 1] - 1);
        it = memo[t].emplace(key, p).first;
      }
      prod = prod * it->second;
    }
    auto slot = result.find(key_states);
    if (slot == result.end())
      result.emplace(key_states, prod);
    else
      slot->second += prod;
  };

  auto recurse = [&](auto&& self, size_t k, const RootScalar& scalar) -> void {
    if (k == faces.size()) {
      leaf(scalar);
      return;
    }
    const Interface& f = faces[k];
    size_t mark = key_states.size();
    for (const auto& [states, value] : f.tensor) {
      const StateVector* sv[2] = {&states.first, &states.second};
      bool ok = true;
      key_states.resize(mark);
      for (int side = 0; side < 2 && ok; ++side) {
        if (f.open[side]) {
          if (free_boundary)
            key_states.insert(key_states.end(), sv[side]->begin(), sv[side]->end());
          else
            ok = *sv[side] == f.fixed;
          continue;
        }
        for (size_t i = 0; i < f.vars[side].size(); ++i) state[f.vars[side][i]] = (*sv[side])[i];
      }
      if (!ok) continue;
      for (int a : complete[k])
        if ((*mats[a])(state[2 * a] - 1, state[2 * a + 1] - 1).is_zero()) ok = false;
      if (ok) self(self, k + 1, scalar * value);
    }
    key_states.resize(mark);
  };
  recurse(recurse, 0, RootScalar(1));
  for (auto it = result.begin(); it != result.end();) it = it->second.is_zero() ? result.erase(it) : std::next(it);
  return result;
}

}  // namespace

std::map<StateVector, TorusElement> boundary_trace_tensor(const GoodPositionLink& link, const SurfaceTorusSpec& s) {
  return state_sum(link, s, true);
}

TracePolynomial quantum_trace(const GoodPositionLink& link, const SurfaceTorusSpec& s) {
  auto sums = state_sum(link, s, false);
  TorusElement total = sums.empty() ? TorusElement(s.tensor()) : sums.begin()->second;
  TracePolynomial r{total, std::nullopt};
  try {
    r.glued = s.project(total);
  } catch (const Error&) {
  }
  return r;
}

}  // namespace qtrace
