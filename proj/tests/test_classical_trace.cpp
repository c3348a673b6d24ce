#include <doctest.h>

#include "checks.hpp"

using namespace qtrace;

TEST_CASE("quantum trace at h = 1 is the classical trace") {
  SurfaceTorusSpec s(support::punctured_torus(), 3);
  for (const support::KnotFixture& k : support::torus_knots()) {
    CAPTURE(k.name);
    checks::Outcome o = checks::classical_property(k, s);
    CHECK_MESSAGE(o.ok, o.detail);
  }
}

TEST_CASE("classical trace agrees with the numeric monodromy") {
  SurfaceTorusSpec s(support::punctured_torus(), 3);
  for (const support::KnotFixture& k : support::torus_knots()) {
    CAPTURE(k.name);
    checks::Outcome o = checks::numeric_oracle(k.curve, s, 6, 3);
    CHECK_MESSAGE(o.ok, o.detail);
  }
}

TEST_CASE("the curve's starting step does not matter") {
  SurfaceTorusSpec s(support::punctured_torus(), 3);
  for (const support::KnotFixture& k : support::torus_knots()) {
    TorusElement base = classical_trace_polynomial(k.curve, s);
    CurveDescription c = k.curve;
    for (size_t r = 1; r < c.steps.size(); ++r) {
      std::rotate(c.steps.begin(), c.steps.begin() + 1, c.steps.end());
      CHECK(classical_trace_polynomial(c, s) == base);
    }
  }
}

TEST_CASE("classical references are reproduced") {
  SurfaceTorusSpec s(support::punctured_torus(), 3);
  auto k = support::torus_knots();
  CHECK(emit_polynomial(polynomial_file(classical_trace_polynomial(k[0].curve, s), true)) ==
        support::fixture("lr.classical.yaml"));
  CHECK(emit_polynomial(polynomial_file(classical_trace_polynomial(k[1].curve, s), true)) ==
        support::fixture("peripheral.classical.yaml"));
}

TEST_CASE("oracle catches a wrong polynomial") {
  // Dropping a single term must show up numerically.
  SurfaceTorusSpec s(support::punctured_torus(), 3);
  CurveDescription c = support::torus_knots()[0].curve;
  TorusElement poly = classical_trace_polynomial(c, s);
  const auto& [mono, coef] = *poly.terms().begin();
  TorusElement wrong = poly - TorusElement(poly.spec(), mono, coef);
  std::vector<double> x(s.glued()->size());
  for (size_t i = 0; i < x.size(); ++i) x[i] = 0.5 + 0.3 * i;
  CHECK(std::abs(specialize_numeric(poly, 1.0, x) - checks::numeric_monodromy(c, s, x)) < 1e-9);
  CHECK(std::abs(specialize_numeric(wrong, 1.0, x) - checks::numeric_monodromy(c, s, x)) > 1e-6);
}
