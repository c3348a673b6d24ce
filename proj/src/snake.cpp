#include "qtrace/snake.hpp"

namespace qtrace {

namespace {

TorusElement mono(const SpecPtr& spec, int var, int e) {
  if (var < 0 || e == 0) return TorusElement(spec, RootScalar(1));
  return TorusElement::generator(spec, var, e);
}

}  // namespace

TorusMatrix elementary_matrix(ElementaryKind kind, int n, int j, int var, const SpecPtr& spec) {
  if (j < 1 || j > n - 1) throw Error("elementary matrix index out of range");
  TorusMatrix m(n, n, TorusElement(spec));
  switch (kind) {
    case ElementaryKind::Edge:
      for (int i = 1; i <= n; ++i) m(i - 1, i - 1) = mono(spec, var, i <= j ? n - j : -j);
      break;
    case ElementaryKind::Left: {
      int pre = -(j - 1);
      for (int i = 1; i <= n; ++i) m(i - 1, i - 1) = mono(spec, var, i <= j - 1 ? n + pre : pre);
      m(j - 1, j) = mono(spec, var, pre);
      break;
    }
    case ElementaryKind::Right: {
      int pre = j - 1;
      int ones = n - j + 1;
      for (int i = 1; i <= n; ++i) m(i - 1, i - 1) = mono(spec, var, i <= ones ? pre : pre - n);
      m(ones - 1, ones - 2) = mono(spec, var, pre);
      break;
    }
  }
  return m;
}

TorusMatrix edge_matrix(const std::vector<int>& z, const SpecPtr& spec) {
  int n = spec->n();
  if (static_cast<int>(z.size()) != n - 1) throw Error("edge matrix needs n-1 labels");
  TorusMatrix m = torus_identity(spec, n);
  for (int j = 1; j <= n - 1; ++j) m = mat_mul(m, elementary_matrix(ElementaryKind::Edge, n, j, z[j - 1], spec));
  return m;
}

TorusMatrix left_matrix(const std::function<int(const Vertex&)>& x, const SpecPtr& spec) {
  int n = spec->n();
  TorusMatrix m = torus_identity(spec, n);
  for (int i = n - 1; i >= 1; --i) {
    TorusMatrix f = elementary_matrix(ElementaryKind::Left, n, 1, -1, spec);
    for (int j = 2; j <= i; ++j)
      f = mat_mul(f, elementary_matrix(ElementaryKind::Left, n, j, x({j - 1, n - i, i - j + 1}), spec));
    m = mat_mul(m, f);
  }
  return m;
}

TorusMatrix right_matrix(const std::function<int(const Vertex&)>& x, const SpecPtr& spec) {
  int n = spec->n();
  TorusMatrix m = torus_identity(spec, n);
  for (int i = n - 1; i >= 1; --i) {
    TorusMatrix f = elementary_matrix(ElementaryKind::Right, n, 1, -1, spec);
    for (int j = 2; j <= i; ++j)
      f = mat_mul(f, elementary_matrix(ElementaryKind::Right, n, j, x({i - j + 1, n - i, j - 1}), spec));
    m = mat_mul(m, f);
  }
  return m;
}

TorusMatrix uturn_classical(int n, bool clockwise, const SpecPtr& spec) {
  TorusMatrix m(n, n, TorusElement(spec));
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = TorusElement(spec, RootScalar((n - 1 - i) % 2 == 0 ? 1 : -1));
  return clockwise ? m : m.transpose();
}

int exit_side(Turn turn, int entry_side) {
  // Standard picture: entering side 1, a left turn exits side 2 and a right turn side 0.
  return rotate_side(turn == Turn::Left ? 2 : 0, entry_side - 1);
}

TurnLabels arc_labels(const DiscreteTriangle& t, Turn turn, int entry_side,
                      const std::function<int(const Vertex&)>& index) {
  if (entry_side < 0 || entry_side > 2) throw Error("side must be 0, 1 or 2");
  int k = ((entry_side - 1) % 3 + 3) % 3;
  int n = t.n();
  TurnLabels l;
  for (int j = 1; j <= n - 1; ++j) {
    l.entry.push_back(index(rotate({j, 0, n - j}, k)));
    l.exit.push_back(index(rotate(turn == Turn::Left ? Vertex{j, n - j, 0} : Vertex{0, j, n - j}, k)));
  }
  l.interior = [index, k](const Vertex& v) { return index(rotate(v, k)); };
  return l;
}

TorusMatrix classical_turn_matrix(Turn turn, const TurnLabels& labels, const SpecPtr& spec) {
  TorusMatrix core = turn == Turn::Left ? left_matrix(labels.interior, spec) : right_matrix(labels.interior, spec);
  return mat_mul(mat_mul(edge_matrix(labels.entry, spec), core), edge_matrix(labels.exit, spec));
}

TorusMatrix quantum_turn_matrix(Turn turn, const TurnLabels& labels, const SpecPtr& spec) {
  TorusMatrix c = classical_turn_matrix(turn, labels, spec->commutative());
  return c.map([&](const TorusElement& e) { return weyl_lift(e, spec); });
}

TorusMatrix quantum_left5(const SpecPtr& spec, int W, int Z, int Wp, int Zp, int X) {
  if (spec->n() != 3) throw Error("five-tuple form is defined for n = 3");
  TurnLabels l{{W, Z}, {Zp, Wp}, [X](const Vertex&) { return X; }};
  return quantum_turn_matrix(Turn::Left, l, spec);
}

TorusMatrix quantum_right5(const SpecPtr& spec, int W, int Z, int Wp, int Zp, int X) {
  if (spec->n() != 3) throw Error("five-tuple form is defined for n = 3");
  TurnLabels l{{Wp, Zp}, {Z, W}, [X](const Vertex&) { return X; }};
  return quantum_turn_matrix(Turn::Right, l, spec);
}

}  // namespace qtrace
