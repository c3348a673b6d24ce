#include "qtrace/quiver.hpp"

#include <string>

namespace qtrace {

DiscreteTriangle::DiscreteTriangle(int n) : n_(n) {
  if (n < 2) throw Error("discrete triangle needs n >= 2");
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      Vertex v{a, b, n - a - b};
      if (v[0] == n || v[1] == n || v[2] == n) continue;
      lookup_[v] = static_cast<int>(vertices_.size());
      vertices_.push_back(v);
    }
}

int DiscreteTriangle::index(const Vertex& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) throw Error("vertex not in discrete triangle");
  return it->second;
}

Vertex DiscreteTriangle::exit_dot(int side, int j) const {
  if (j < 1 || j > n_ - 1) throw Error("edge dot index out of range");
  switch (side) {
    case 0: return {0, j, n_ - j};
    case 1: return {n_ - j, 0, j};
    case 2: return {j, n_ - j, 0};
  }
  throw Error("side must be 0, 1 or 2");
}

Vertex rotate(const Vertex& v, int times) {
  Vertex r = v;
  for (int t = 0; t < ((times % 3) + 3) % 3; ++t) r = {r[2], r[0], r[1]};
  return r;
}

int rotate_side(int side, int times) { return (side + ((times % 3) + 3) % 3) % 3; }

std::vector<int> quiver_matrix(int n) {
  DiscreteTriangle t(n);
  int N = t.size();
  std::vector<int> P(static_cast<size_t>(N) * N, 0);
  auto arrow = [&](const Vertex& u, const Vertex& v) {
    if (!t.contains(u) || !t.contains(v)) return;
    int i = t.index(u), j = t.index(v);
    P[static_cast<size_t>(i) * N + j] += 1;
    P[static_cast<size_t>(j) * N + i] -= 1;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; a + b < n; ++b) {
      int c = n - 1 - a - b;
      Vertex A{a + 1, b, c}, B{a, b + 1, c}, C{a, b, c + 1};
      arrow(A, C);
      arrow(C, B);
      arrow(B, A);
    }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b < n + 1; ++b) {
      int c = n + 1 - a - b;
      if (c < 1) continue;
      Vertex A{a - 1, b, c}, B{a, b - 1, c}, C{a, b, c - 1};
      arrow(A, B);
      arrow(B, C);
      arrow(C, A);
    }
  return P;
}

TriangleTorusSpec triangle_poisson(int n) {
  DiscreteTriangle t(n);
  std::vector<std::string> names;
  for (const Vertex& v : t.vertices())
    names.push_back("X" + std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]));
  return {t, make_spec(n, t.size(), quiver_matrix(n), names)};
}

}  // namespace qtrace
