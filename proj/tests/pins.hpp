#pragma once

#include <string>
#include <vector>

#include "qtrace/snake.hpp"
#include "qtrace/verify.hpp"
#include "support.hpp"

namespace pins {

using namespace qtrace;
using support::weyl;

// Exponent of a named generator, in units of 1/n.
struct Power {
  Vertex v;
  int units;
};

inline TorusElement weyl_term(const TriangleTorusSpec& t, const std::vector<Power>& p) {
  std::vector<std::pair<int, int>> e;
  for (const Power& x : p) e.push_back({t.index(x.v), x.units});
  return weyl(t.spec, e);
}

inline TorusElement weyl_sum(const TriangleTorusSpec& t, const std::vector<std::vector<Power>>& terms) {
  TorusElement r(t.spec);
  for (const auto& p : terms) r += weyl_term(t, p);
  return r;
}

// ---------------------------------------------------------------------------
// n = 3: an arc entering through edge (W, Z) and leaving through (W', Z').

struct Five {
  Vertex W{1, 0, 2}, Z{2, 0, 1}, Wp{2, 1, 0}, Zp{1, 2, 0}, X{1, 1, 1};
};

inline std::vector<Power> five(int w, int z, int wp, int zp, int x) {
  Five f;
  return {{f.W, w}, {f.Z, z}, {f.Wp, wp}, {f.Zp, zp}, {f.X, x}};
}

// D = W^{-1/3} Z^{-2/3} X^{-1/3} Z'^{-1/3} W'^{-2/3} times
// [[W Z X Z' W', W Z X W' + W Z W', W Z], [0, Z W', Z], [0, 0, 1]].
inline TorusMatrix displayed_left3(const TriangleTorusSpec& t) {
  TorusMatrix m(3, 3, TorusElement(t.spec));
  m(0, 0) = weyl_term(t, five(2, 1, 1, 2, 2));
  m(0, 1) = weyl_sum(t, {five(2, 1, 1, -1, 2), five(2, 1, 1, -1, -1)});
  m(0, 2) = weyl_term(t, five(2, 1, -2, -1, -1));
  m(1, 1) = weyl_term(t, five(-1, 1, 1, -1, -1));
  m(1, 2) = weyl_term(t, five(-1, 1, -2, -1, -1));
  m(2, 2) = weyl_term(t, five(-1, -2, -2, -1, -1));
  return m;
}

// D = W'^{-1/3} Z'^{-2/3} X^{1/3} Z^{-1/3} W^{-2/3} times
// [[W' Z' Z W, 0, 0], [Z' Z W, Z' W, 0], [Z W, W + X^{-1} W, X^{-1}]].
inline TorusMatrix displayed_right3(const TriangleTorusSpec& t) {
  TorusMatrix m(3, 3, TorusElement(t.spec));
  m(0, 0) = weyl_term(t, five(1, 2, 2, 1, 1));
  m(1, 0) = weyl_term(t, five(1, 2, -1, 1, 1));
  m(1, 1) = weyl_term(t, five(1, -1, -1, 1, 1));
  m(2, 0) = weyl_term(t, five(1, 2, -1, -2, 1));
  m(2, 1) = weyl_sum(t, {five(1, -1, -1, -2, 1), five(1, -1, -1, -2, -2)});
  m(2, 2) = weyl_term(t, five(-2, -1, -1, -2, -2));
  return m;
}

inline bool left3_pin() {
  Five f;
  TriangleTorusSpec t = triangle_poisson(3);
  int W = t.index(f.W), Z = t.index(f.Z), Wp = t.index(f.Wp), Zp = t.index(f.Zp), X = t.index(f.X);
  return quantum_left5(t.spec, W, Z, Wp, Zp, X) == displayed_left3(t);
}

inline bool right3_pin() {
  Five f;
  TriangleTorusSpec t = triangle_poisson(3);
  int W = t.index(f.W), Z = t.index(f.Z), Wp = t.index(f.Wp), Zp = t.index(f.Zp), X = t.index(f.X);
  return quantum_right5(t.spec, W, Z, Wp, Zp, X) == displayed_right3(t);
}

// ---------------------------------------------------------------------------
// n = 4 with the arc entering through side 0. Z1..Z3 sit on the entry side,
// Z'1..Z'3 on the exit side of a left turn and Z''1..Z''3 on that of a right
// turn; X1..X3 are the interior dots.

struct Four {
  Vertex Z1{0, 3, 1}, Z2{0, 2, 2}, Z3{0, 1, 3};
  Vertex L1{3, 0, 1}, L2{2, 0, 2}, L3{1, 0, 3};
  Vertex R1{1, 3, 0}, R2{2, 2, 0}, R3{3, 1, 0};
  Vertex X1{1, 2, 1}, X2{1, 1, 2}, X3{2, 1, 1};
};

// Classical factorization: edge matrix, then alternating unipotent and
// diagonal-with-one-off-diagonal factors, then the exit edge matrix. The whole
// product is Weyl-lifted term by term.
class Display4 {
 public:
  Display4() : t_(triangle_poisson(4)), c_(t_.spec->commutative()) {}

  TorusMatrix left() const {
    Four f;
    TorusMatrix p = product({edge(f.Z1, f.Z2, f.Z3), upper(), core(f.X1, false, 1, 2, -1), core(f.X2, true, 2, 3, -2),
                             upper(), core(f.X3, false, 1, 2, -1), upper(), edge(f.L1, f.L2, f.L3)});
    return lift(p);
  }

  TorusMatrix right() const {
    Four f;
    TorusMatrix p = product({edge(f.Z1, f.Z2, f.Z3), lower(), tail({f.X2, -4}, false, 2, 1, 1), tail({f.X1, -4}, true, 1, 0, 2),
                             lower(), tail({f.X3, -4}, false, 2, 1, 1), lower(), edge(f.R1, f.R2, f.R3)});
    return lift(p);
  }

  const TriangleTorusSpec& triangle() const { return t_; }

 private:
  TorusElement mono(const std::vector<Power>& p) const {
    Monomial m(t_.spec->size(), 0);
    for (const Power& x : p) m[t_.index(x.v)] += x.units;
    return TorusElement(c_, m);
  }

  TorusMatrix identity() const { return torus_identity(c_, 4); }

  TorusMatrix scaled(TorusMatrix m, const TorusElement& s) const {
    return m.map([&](const TorusElement& e) { return s * e; });
  }

  // Z1^{-1/4} Z2^{-2/4} Z3^{-3/4} diag(Z1 Z2 Z3, Z2 Z3, Z3, 1)
  TorusMatrix edge(Vertex a, Vertex b, Vertex c) const {
    TorusMatrix m = identity();
    m(0, 0) = mono({{a, 4}, {b, 4}, {c, 4}});
    m(1, 1) = mono({{b, 4}, {c, 4}});
    m(2, 2) = mono({{c, 4}});
    return scaled(m, mono({{a, -1}, {b, -2}, {c, -3}}));
  }

  TorusMatrix upper() const {
    TorusMatrix m = identity();
    m(0, 1) = mono({});
    return m;
  }

  TorusMatrix lower() const {
    TorusMatrix m = identity();
    m(3, 2) = mono({});
    return m;
  }

  // X^{s/4} diag(X, X or 1, 1, 1) with a 1 at (i, j).
  TorusMatrix core(Vertex x, bool two, int i, int j, int s) const {
    TorusMatrix m = identity();
    m(0, 0) = mono({{x, 4}});
    if (two) m(1, 1) = mono({{x, 4}});
    m(i, j) = mono({});
    return scaled(m, mono({{x, s}}));
  }

  // X^{s/4} with the last diagonal entries X^{-1} and a 1 at (i, j).
  TorusMatrix tail(Power inv, bool two, int i, int j, int s) const {
    TorusMatrix m = identity();
    m(3, 3) = mono({inv});
    if (two) m(2, 2) = mono({inv});
    m(i, j) = mono({});
    return scaled(m, mono({{inv.v, s}}));
  }

  TorusMatrix product(const std::vector<TorusMatrix>& f) const {
    TorusMatrix r = identity();
    for (const TorusMatrix& m : f) r = mat_mul(r, m);
    return r;
  }

  TorusMatrix lift(const TorusMatrix& m) const {
    return m.map([&](const TorusElement& e) { return weyl_lift(e, t_.spec); });
  }

  TriangleTorusSpec t_;
  SpecPtr c_;
};

inline bool left4_pin() { return Display4().left() == triangle_turn_matrix(4, Turn::Left); }
inline bool right4_pin() { return Display4().right() == triangle_turn_matrix(4, Turn::Right); }

// Entries (1,3), (1,4), (2,3), (2,4) of L, one-based, as printed.
inline bool left4_quoted() {
  Four f;
  TriangleTorusSpec t = triangle_poisson(4);
  auto term = [&](std::vector<int> z, std::vector<int> zp, std::vector<int> x) {
    return std::vector<Power>{{f.Z3, z[0]}, {f.Z2, z[1]}, {f.Z1, z[2]}, {f.L3, zp[0]}, {f.L2, zp[1]}, {f.L1, zp[2]},
                              {f.X1, x[0]}, {f.X2, x[1]}, {f.X3, x[2]}};
  };
  TorusMatrix m = triangle_turn_matrix(4, Turn::Left);
  return m(0, 2) == weyl_sum(t, {term({1, 2, 3}, {1, -2, -1}, {-1, -2, -1}), term({1, 2, 3}, {1, -2, -1}, {-1, 2, -1}),
                                 term({1, 2, 3}, {1, -2, -1}, {3, 2, -1})}) &&
         m(0, 3) == weyl_sum(t, {term({1, 2, 3}, {-3, -2, -1}, {-1, -2, -1})}) &&
         m(1, 2) == weyl_sum(t, {term({1, 2, -1}, {1, -2, -1}, {-1, -2, -1}), term({1, 2, -1}, {1, -2, -1}, {-1, 2, -1})}) &&
         m(1, 3) == weyl_sum(t, {term({1, 2, -1}, {-3, -2, -1}, {-1, -2, -1})});
}

// Entries (3,1), (3,2), (4,1), (4,2) of R, one-based, as printed.
inline bool right4_quoted() {
  Four f;
  TriangleTorusSpec t = triangle_poisson(4);
  auto term = [&](std::vector<int> z, std::vector<int> x, std::vector<int> zr) {
    return std::vector<Power>{{f.Z3, z[0]}, {f.Z2, z[1]}, {f.Z1, z[2]}, {f.X2, x[0]}, {f.X1, x[1]}, {f.X3, x[2]},
                              {f.R3, zr[0]}, {f.R2, zr[1]}, {f.R1, zr[2]}};
  };
  TorusMatrix m = triangle_turn_matrix(4, Turn::Right);
  std::vector<int> up{1, -2, -1}, down{-3, -2, -1};
  return m(2, 0) == weyl_sum(t, {term(up, {1, 2, 1}, {1, 2, 3})}) &&
         m(2, 1) == weyl_sum(t, {term(up, {1, -2, 1}, {1, 2, -1}), term(up, {1, 2, 1}, {1, 2, -1})}) &&
         m(3, 0) == weyl_sum(t, {term(down, {1, 2, 1}, {1, 2, 3})}) &&
         m(3, 1) == weyl_sum(t, {term(down, {-3, -2, 1}, {1, 2, -1}), term(down, {1, -2, 1}, {1, 2, -1}),
                                 term(down, {1, 2, 1}, {1, 2, -1})});
}

}  // namespace pins
