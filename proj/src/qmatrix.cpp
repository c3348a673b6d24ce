#include "qtrace/qmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace qtrace {

bool check_m2q(const TorusElement& a, const TorusElement& b, const TorusElement& c, const TorusElement& d) {
  RootScalar q = RootScalar::q_power(a.spec()->n(), 1);
  RootScalar qinv = RootScalar::q_power(a.spec()->n(), -1);
  return b * a == (a * b) * q && d * c == (c * d) * q && c * a == (a * c) * q && d * b == (b * d) * q &&
         b * c == c * b && d * a - a * d == (b * c) * (q - qinv);
}

bool QuantumMatrixWitness::all_minors_ok() const {
  return std::all_of(minors.begin(), minors.end(), [](const MinorResult& r) { return r.ok; });
}

bool QuantumMatrixWitness::determinant_is_one() const {
  return determinant == TorusElement(determinant.spec(), RootScalar(1));
}

TorusElement quantum_determinant(const TorusMatrix& m) {
  int n = m.rows();
  if (m.cols() != n) throw Error("quantum determinant of a non-square matrix");
  const SpecPtr& spec = m.zero().spec();
  RootScalar minus_q = -RootScalar::q_power(spec->n(), 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  TorusElement det(spec);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    TorusElement term(spec, minus_q.pow(inversions));
    for (int i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

QuantumMatrixWitness quantum_matrix_witness(const TorusMatrix& m) {
  QuantumMatrixWitness w{{}, quantum_determinant(m)};
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.rows(); ++j)
      for (int k = 0; k < m.cols(); ++k)
        for (int l = k + 1; l < m.cols(); ++l)
          w.minors.push_back({i, j, k, l, check_m2q(m(i, k), m(i, l), m(j, k), m(j, l))});
  return w;
}

bool is_slnq_point(const TorusMatrix& m) {
  QuantumMatrixWitness w = quantum_matrix_witness(m);
  return w.all_minors_ok() && w.determinant_is_one();
}

}  // namespace qtrace
