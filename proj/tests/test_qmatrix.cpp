#include <doctest.h>

#include "qtrace/qmatrix.hpp"
#include "qtrace/verify.hpp"
#include "support.hpp"

using namespace qtrace;

TEST_CASE("quantum plane relations on a hand-built point") {
  // a = X, d = X^{-1}, b = c = 0 satisfy every relation.
  SpecPtr s = make_spec(3, 1, {0});
  TorusElement a = TorusElement::generator(s, 0, 3), d = TorusElement::generator(s, 0, -3), z(s);
  CHECK(check_m2q(a, z, z, d));
  TorusMatrix m(2, 2, z);
  m(0, 0) = a;
  m(1, 1) = d;
  CHECK(is_slnq_point(m));
}

TEST_CASE("commuting entries fail the relations") {
  SpecPtr s = make_spec(3, 2, {0, 0, 0, 0});
  TorusElement x = TorusElement::generator(s, 0, 3), y = TorusElement::generator(s, 1, 3), one(s, RootScalar(1));
  CHECK_FALSE(check_m2q(x, y, one, one));
}

TEST_CASE("turn matrices are points of SL_n^q") {
  for (int n = 2; n <= 4; ++n)
    for (Turn turn : {Turn::Left, Turn::Right}) {
      QuantumMatrixWitness w = quantum_matrix_witness(triangle_turn_matrix(n, turn));
      int expected = (n * (n - 1) / 2) * (n * (n - 1) / 2);
      CHECK(static_cast<int>(w.minors.size()) == expected);
      CHECK(w.all_minors_ok());
      CHECK(w.determinant_is_one());
    }
}

TEST_CASE("dropping the determinant normalization is detected") {
  for (Turn turn : {Turn::Left, Turn::Right}) {
    QuantumMatrixWitness w = quantum_matrix_witness(unnormalized_turn_matrix(3, turn));
    CHECK_FALSE((w.all_minors_ok() && w.determinant_is_one()));
  }
}

TEST_CASE("products of points stay points") {
  TorusMatrix L = triangle_turn_matrix(2, Turn::Left);
  QuantumMatrixWitness w = quantum_matrix_witness(mat_mul(L, L));
  CHECK(w.determinant_is_one());
}

TEST_CASE("report lines") {
  std::vector<CheckResult> r = run_suite("matrices", 3);
  CHECK(r.size() == 5);
  std::string text = format_report(r);
  CHECK(text.find("5 of 5 checks passed") != std::string::npos);
  CHECK_THROWS_AS(run_suite("matrices", 5), Error);
  CHECK_THROWS_AS(run_suite("nonsense", 3), Error);
}
