#include <string>

#include "qtrace/surface.hpp"

namespace qtrace {

namespace {

std::string dot_name(const Vertex& v) {
  return std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]);
}

// Side s containing a non-interior dot of the standard triangle.
int side_of(const Vertex& v) {
  for (int s = 0; s < 3; ++s)
    if (v[s] == 0) return s;
  return -1;
}

// j with exit_dot(s, j) == v.
int exit_position(const DiscreteTriangle& tri, int s, const Vertex& v) {
  for (int j = 1; j < tri.n(); ++j)
    if (tri.exit_dot(s, j) == v) return j;
  throw Error("dot not on side");
}

}  // namespace

SurfaceTorusSpec::SurfaceTorusSpec(IdealTriangulation t, int n) : tri_(std::move(t)), triangle_(n) {
  TriangleTorusSpec local = triangle_poisson(n);
  int m = triangle_.size();
  int T = tri_.triangle_count();
  int N = T * m;
  std::vector<int> P(static_cast<size_t>(N) * N, 0);
  std::vector<std::string> names;
  for (int t = 0; t < T; ++t)
    for (int i = 0; i < m; ++i) {
      names.push_back("T" + std::to_string(t) + ".X" + dot_name(triangle_.vertices()[i]));
      for (int j = 0; j < m; ++j) P[static_cast<size_t>(t * m + i) * N + t * m + j] = local.spec->P(i, j);
    }
  tensor_ = make_spec(n, N, P, names);

  glued_of_.assign(N, -1);
  std::vector<std::string> gnames;
  for (int t = 0; t < T; ++t)
    for (int i = 0; i < m; ++i) {
      int a = t * m + i;
      if (glued_of_[a] >= 0) continue;
      const Vertex& v = triangle_.vertices()[i];
      int id = static_cast<int>(copies_.size());
      copies_.push_back({a});
      glued_of_[a] = id;
      if (DiscreteTriangle::interior(v)) {
        gnames.push_back("T" + std::to_string(t) + ".X" + dot_name(v));
        continue;
      }
      int s = side_of(v);
      int j = exit_position(triangle_, s, v);
      const EdgeRecord& e = tri_.edge(tri_.edge_at(t, s));
      // Name by the dot position as seen leaving the first incidence.
      int jn = e.incidences[0] == Incidence{t, s} ? j : n - j;
      gnames.push_back("E" + std::to_string(e.id) + "." + std::to_string(jn));
      Incidence o = tri_.across(t, s);
      if (o.triangle >= 0) {
        int b = tensor_index(o.triangle, triangle_.entry_dot(o.side, j));
        copies_.back().push_back(b);
        glued_of_[b] = id;
      }
    }
  int G = static_cast<int>(copies_.size());
  std::vector<int> GP(static_cast<size_t>(G) * G, 0);
  for (int u = 0; u < G; ++u)
    for (int v = 0; v < G; ++v)
      for (int a : copies_[u])
        for (int b : copies_[v]) GP[static_cast<size_t>(u) * G + v] += tensor_->P(a, b);
  glued_ = make_spec(n, G, GP, gnames);
}

SurfaceTorusSpec build_surface(const IdealTriangulation& t, int n) { return SurfaceTorusSpec(t, n); }

TorusElement SurfaceTorusSpec::project(const TorusElement& x) const {
  const QuantumTorusSpec& ts = *tensor_;
  TorusElement r(glued_);
  int G = glued_->size();
  for (const auto& [m, c] : x.terms()) {
    Monomial g(G, 0);
    for (int u = 0; u < G; ++u) {
      g[u] = m[copies_[u][0]];
      for (int a : copies_[u])
        if (m[a] != g[u]) {
          TorusElement single(tensor_, m);
          throw Error("pairing violation at " + glued_->name(u) + " in monomial " + single.to_string());
        }
    }
    // The glued normal monomial read in the tensor algebra is h^k times the
    // tensor normal monomial m.
    Monomial acc(ts.size(), 0);
    int k = 0;
    for (int u = 0; u < G; ++u) {
      if (g[u] == 0) continue;
      Monomial y(ts.size(), 0);
      for (int a : copies_[u]) y[a] = g[u];
      k += reorder_exponent(ts, acc, y);
      for (int a : copies_[u]) acc[a] += g[u];
    }
    r.add_term(g, c * RootScalar::h_power(-k));
  }
  return r;
}

}  // namespace qtrace
