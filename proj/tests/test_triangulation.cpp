#include <doctest.h>

#include "qtrace/formats.hpp"
#include "qtrace/triangulation.hpp"
#include "support.hpp"

using namespace qtrace;

TEST_CASE("punctured torus") {
  IdealTriangulation t = support::punctured_torus();
  CHECK(t.internal_edge_count() == 3);
  CHECK(t.puncture_count() == 1);
  for (int tri = 0; tri < 2; ++tri)
    for (int s = 0; s < 3; ++s) {
      CHECK(t.edge_at(tri, s) == s);
      CHECK(t.across(tri, s) == Incidence{1 - tri, s});
      CHECK(t.biangle_side(tri, s) == tri);
    }
}

TEST_CASE("the surface fixture is the punctured torus") {
  SurfaceFile f = parse_surface(support::fixture("torus.surface.yaml"));
  CHECK(f.n == 3);
  CHECK(f.triangulation.triangle_count() == 2);
  CHECK(f.triangulation.puncture_count() == 1);
}

TEST_CASE("boundary edges and the biangle side") {
  IdealTriangulation a = support::lone_triangle(), b = support::lone_triangle({0});
  CHECK(a.internal_edge_count() == 0);
  CHECK(a.across(0, 1).triangle == -1);
  CHECK(a.biangle_side(0, 0) == 0);
  CHECK(b.biangle_side(0, 0) == 1);
  CHECK(b.biangle_side(0, 1) == 0);
}

TEST_CASE("invalid triangulations") {
  CHECK_THROWS_WITH_AS(IdealTriangulation(1, {{0, {{0, 0}}, true}, {0, {{0, 1}}, true}, {2, {{0, 2}}, true}}),
                       doctest::Contains("duplicate edge id"), Error);
  CHECK_THROWS_WITH_AS(IdealTriangulation(1, {{0, {{0, 0}}, true}, {1, {{0, 1}}, true}}),
                       doctest::Contains("has no edge"), Error);
  CHECK_THROWS_WITH_AS(IdealTriangulation(1, {{0, {{0, 0}, {0, 1}}}, {2, {{0, 2}}, true}}),
                       doctest::Contains("self-folded"), Error);
  CHECK_THROWS_WITH_AS(IdealTriangulation(1, {{0, {{0, 0}}, false}, {1, {{0, 1}}, true}, {2, {{0, 2}}, true}}),
                       doctest::Contains("boundary flag"), Error);
  CHECK_THROWS_WITH_AS(IdealTriangulation(1, {{0, {{0, 3}}, true}, {1, {{0, 1}}, true}, {2, {{0, 2}}, true}}),
                       doctest::Contains("side must be"), Error);
  CHECK_THROWS_WITH_AS(IdealTriangulation(2, {{0, {{0, 0}, {1, 0}}, false, true}, {1, {{0, 1}, {1, 1}}}, {2, {{0, 2}, {1, 2}}}}),
                       doctest::Contains("only boundary edges"), Error);
}

TEST_CASE("splitting into biangles and forgetting them round-trips") {
  for (const IdealTriangulation& t : {support::punctured_torus(), support::lone_triangle({1})}) {
    SplitModel s = split_triangulation(t);
    CHECK(static_cast<int>(s.biangles.size()) == static_cast<int>(t.edges().size()));
    IdealTriangulation back = forget_split(s);
    CHECK(back.triangle_count() == t.triangle_count());
    for (int tri = 0; tri < t.triangle_count(); ++tri)
      for (int side = 0; side < 3; ++side) {
        CHECK(back.edge_at(tri, side) == t.edge_at(tri, side));
        CHECK(back.biangle_side(tri, side) == t.biangle_side(tri, side));
      }
  }
}

TEST_CASE("a square has one internal edge and four ideal vertices") {
  IdealTriangulation sq(2, {{0, {{0, 0}, {1, 0}}}, {1, {{0, 1}}, true}, {2, {{0, 2}}, true},
                            {3, {{1, 1}}, true}, {4, {{1, 2}}, true}});
  CHECK(sq.internal_edge_count() == 1);
  CHECK(sq.puncture_count() == 4);
}
