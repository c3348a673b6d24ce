#pragma once

#include <string>
#include <vector>

#include "qtrace/matrix.hpp"

namespace qtrace {

// ba = q ab, dc = q cd, ca = q ac, db = q bd, bc = cb, da - ad = (q - q^{-1}) bc.
bool check_m2q(const TorusElement& a, const TorusElement& b, const TorusElement& c, const TorusElement& d);

struct MinorResult {
  int row1, row2, col1, col2;
  bool ok;
};

struct QuantumMatrixWitness {
  std::vector<MinorResult> minors;
  TorusElement determinant;
  bool all_minors_ok() const;
  bool determinant_is_one() const;
};

TorusElement quantum_determinant(const TorusMatrix& m);
QuantumMatrixWitness quantum_matrix_witness(const TorusMatrix& m);
bool is_slnq_point(const TorusMatrix& m);

}  // namespace qtrace
