#include <doctest.h>

#include "checks.hpp"

using namespace qtrace;

TEST_CASE("surface errors carry positions") {
  try {
    parse_surface(support::fixture("malformed.surface.yaml"));
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 38);
    CHECK(std::string(e.what()) == "5:38: side must be 0, 1 or 2");
  }
  CHECK_THROWS_AS(parse_surface("n: [1\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_surface("n: 3\ntriangles: 1\nedges: []\ncolor: red\n"),
                       doctest::Contains("unknown key 'color'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_surface("n: three\ntriangles: 1\nedges: []\n"), doctest::Contains("1:4"), ParseError);
}

TEST_CASE("link errors") {
  IdealTriangulation t = support::punctured_torus();
  CHECK_THROWS_WITH_AS(parse_link("arcs:\n  - {triangle: 0, from: 1, to: 2, turn: X, height: 0}\n", t),
                       doctest::Contains("turn must be one of L, R"), ParseError);
  CHECK_THROWS_WITH_AS(parse_link("arcs:\n  - {triangle: 5, from: 1, to: 2, turn: L, height: 0}\n", t),
                       doctest::Contains("2:16: triangle out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_link("biangles:\n  - edge: 9\n", t), doctest::Contains("unknown edge 9"), ParseError);
}

TEST_CASE("polynomial files round-trip") {
  std::string text = support::fixture("mixed.poly.yaml");
  PolynomialFile p = parse_polynomial(text);
  CHECK(p.n == 3);
  CHECK_FALSE(p.classical);
  CHECK(p.generators.size() == 8);
  CHECK(p.terms.size() == 2);
  CHECK(emit_polynomial(p) == text);
  CHECK(parse_polynomial(emit_polynomial(p)) == p);
  PolynomialFile empty{3, true, {"a"}, {}};
  CHECK(emit_polynomial(empty).find("terms: []") != std::string::npos);
  CHECK(parse_polynomial(emit_polynomial(empty)) == empty);
}

TEST_CASE("trace output is deterministic") {
  SurfaceTorusSpec s(support::punctured_torus(), 3);
  GoodPositionLink l = parse_link(support::fixture("peripheral.link.yaml"), s.triangulation());
  std::string a = emit_polynomial(polynomial_file(checks::glued_trace(l, s), false));
  std::string b = emit_polynomial(polynomial_file(checks::glued_trace(l, s), false));
  CHECK(a == b);
  PolynomialFile f = parse_polynomial(a);
  CHECK(f.generators == std::vector<std::string>{"E0.1", "E0.2", "E1.2", "T0.X111", "E2.1", "E1.1", "E2.2", "T1.X111"});
}

TEST_CASE("h powers render through q, omega or h") {
  CHECK(render_h_power(0, 3) == "1");
  CHECK(render_h_power(18, 3) == "q");
  CHECK(render_h_power(-36, 3) == "q^{-2}");
  CHECK(render_h_power(48, 3) == "q^{8/3}");
  CHECK(render_h_power(6, 3) == "q^{1/3}");
  CHECK(render_h_power(4, 3) == "ω^2");
  CHECK(render_h_power(-3, 3) == "h^{-3}");
  CHECK(render_coefficient(RootScalar::h_power(-6, -2) + RootScalar(1), 3) == "-2 q^{-1/3} + 1");
}

TEST_CASE("explain") {
  PolynomialFile p = parse_polynomial(support::fixture("mixed.poly.yaml"));
  std::string text = explain(p);
  CHECK(text.rfind("quantum trace, n = 3, 2 terms", 0) == 0);
  CHECK(text.find("q^{8/3}") != std::string::npos);
  CHECK(text.find("T0.X111^{-2/3}") != std::string::npos);
}
