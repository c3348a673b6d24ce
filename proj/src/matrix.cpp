#include "qtrace/matrix.hpp"

namespace qtrace {

ScalarMatrix scalar_identity(int n) {
  ScalarMatrix r(n, n, RootScalar());
  for (int i = 0; i < n; ++i) r(i, i) = RootScalar(1);
  return r;
}

TorusMatrix torus_identity(const SpecPtr& spec, int n) {
  TorusMatrix r(n, n, TorusElement(spec));
  for (int i = 0; i < n; ++i) r(i, i) = TorusElement(spec, RootScalar(1));
  return r;
}

TorusMatrix to_torus(const ScalarMatrix& m, const SpecPtr& spec) {
  return m.map([&](const RootScalar& c) { return TorusElement(spec, c); });
}

ScalarMatrix kronecker(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), RootScalar());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

ScalarMatrix unit_pivot_inverse(const ScalarMatrix& m) {
  int n = m.rows();
  if (m.cols() != n) throw Error("inverse: matrix not square");
  ScalarMatrix a = m, inv = scalar_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col).is_unit()) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("inverse: no unit pivot available");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    RootScalar p = a(col, col).unit_inverse();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      RootScalar f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

TorusMatrix chain_product(const std::vector<TorusMatrix>& mats, const std::vector<int>& order) {
  size_t k = mats.size();
  if (k == 0 || order.size() != k) throw Error("chain_product: bad arguments");
  for (size_t t = 0; t + 1 < k; ++t)
    if (mats[t].cols() != mats[t + 1].rows()) throw Error("chain_product: dimension mismatch");
  const TorusElement& zero = mats[0].zero();
  TorusMatrix r(mats[0].rows(), mats[k - 1].cols(), zero);
  std::vector<int> idx(k + 1, 0);
  for (int i = 0; i < mats[0].rows(); ++i)
    for (int j = 0; j < mats[k - 1].cols(); ++j) {
      TorusElement acc = zero;
      idx[0] = i;
      idx[k] = j;
      // Enumerate interior indices idx[1..k-1].
      std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == k) {
          TorusElement prod(zero.spec(), RootScalar(1));
          for (int f : order) {
            const TorusElement& e = mats[f](idx[f], idx[f + 1]);
            if (e.is_zero()) return;
            prod = prod * e;
          }
          acc += prod;
          return;
        }
        for (int v = 0; v < mats[pos].rows(); ++v) {
          idx[pos] = v;
          rec(pos + 1);
        }
      };
      rec(1);
      r(i, j) = acc;
    }
  return r;
}

}  // namespace qtrace
