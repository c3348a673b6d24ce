#include <string>

#include "qtrace/surface.hpp"

namespace qtrace {

TorusElement classical_trace_polynomial(const CurveDescription& c, const SurfaceTorusSpec& s) {
  const IdealTriangulation& tri = s.triangulation();
  int n = s.n();
  SpecPtr spec = s.glued()->commutative();
  int K = static_cast<int>(c.steps.size());
  if (K == 0) throw Error("curve has no steps");

  // Side through which each step enters, and through which it leaves.
  std::vector<int> entry(K), leave(K);
  for (int k = 0; k < K; ++k) {
    const CurveStep& st = c.steps[k];
    std::string tag = "step " + std::to_string(k) + ": ";
    if (st.triangle < 0 || st.triangle >= tri.triangle_count()) throw Error(tag + "triangle out of range");
    entry[k] = -1;
    for (int side = 0; side < 3; ++side)
      if (tri.edge_at(st.triangle, side) == st.edge) entry[k] = side;
    if (entry[k] < 0) throw Error(tag + "edge is not a side of the triangle");
    if (tri.edge(st.edge).boundary) throw Error(tag + "crosses a boundary edge");
    switch (st.turn) {
      case StepTurn::Left: leave[k] = exit_side(Turn::Left, entry[k]); break;
      case StepTurn::Right: leave[k] = exit_side(Turn::Right, entry[k]); break;
      default: leave[k] = entry[k];
    }
  }
  for (int k = 0; k < K; ++k) {
    int p = (k + K - 1) % K;
    Incidence from = tri.across(c.steps[k].triangle, entry[k]);
    if (from.triangle != c.steps[p].triangle || from.side != leave[p])
      throw Error("step " + std::to_string(k) + ": does not continue from step " + std::to_string(p) +
                  (k == 0 ? " (curve not closed)" : ""));
  }

  TorusMatrix acc = torus_identity(spec, n);
  for (int k = 0; k < K; ++k) {
    const CurveStep& st = c.steps[k];
    int p = (k + K - 1) % K;
    std::vector<int> z;
    for (int j = 1; j < n; ++j) z.push_back(s.glued_index(c.steps[p].triangle, s.triangle().exit_dot(leave[p], j)));
    acc = mat_mul(acc, edge_matrix(z, spec));
    TorusMatrix m(n, n, TorusElement(spec));
    if (st.turn == StepTurn::Left || st.turn == StepTurn::Right) {
      Turn turn = st.turn == StepTurn::Left ? Turn::Left : Turn::Right;
      int t = st.triangle;
      TurnLabels l = arc_labels(s.triangle(), turn, entry[k], [&s, t](const Vertex& v) { return s.glued_index(t, v); });
      m = turn == Turn::Left ? left_matrix(l.interior, spec) : right_matrix(l.interior, spec);
    } else {
      m = uturn_classical(n, st.turn == StepTurn::UTurnCW, spec);
    }
    if ((n - 1) * st.turns % 2 != 0) m = mat_scale(m, RootScalar(-1));
    acc = mat_mul(acc, m);
  }
  TorusElement tr(spec);
  for (int i = 0; i < n; ++i) tr += acc(i, i);
  return tr;
}

}  // namespace qtrace
