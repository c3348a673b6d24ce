#pragma once

#include "qtrace/matrix.hpp"

namespace qtrace {

struct RibbonConstants {
  int n;
  RootScalar zeta_bar;      // coribbon element
  RootScalar zeta_bar_inv;
  RootScalar sigma_bar;     // its signed square root
  RootScalar quantum_n;     // [n]_q
  static RibbonConstants of(int n);
};

// (-q)^k
RootScalar minus_q_power(int n, int k);

struct UTurnKind {
  bool decreasing;  // strand runs from the higher endpoint to the lower one
  bool clockwise;
  // A clockwise decreasing or counterclockwise increasing U-turn opens to the
  // right (both endpoints on the left cut); the other two open to the left.
  bool endpoints_on_left() const { return decreasing == clockwise; }
};

struct CrossingKind {
  bool positive;
  bool same_direction;
  bool over_to_lower;  // over strand runs from its higher endpoint to its lower one
};

// Rows: incoming state, columns: outgoing state.
ScalarMatrix uturn_matrix(UTurnKind kind, int n);
// Antidiagonal (U_lambda)_i^j = lambda (-q)^{i-n} delta_{i, n-j+1}.
ScalarMatrix uturn_lambda(int n, const RootScalar& lambda);

// Row pair (i1 i2), column pair (j1 j2), second index fastest.
ScalarMatrix crossing_same(int n);
ScalarMatrix crossing_same_inverse(int n);
ScalarMatrix crossing_opp(int n);
ScalarMatrix crossing_opp_inverse(int n);
ScalarMatrix crossing_matrix(CrossingKind kind, int n);

// Matrix coefficients of the symmetrized dualities with parameter lambda,
// compared with the four U-turn expressions.
struct DualityReport {
  bool b_prime, d_prime, b, d;
  bool all() const { return b_prime && d_prime && b && d; }
};
DualityReport duality_lemma(int n, const RootScalar& lambda);

}  // namespace qtrace
