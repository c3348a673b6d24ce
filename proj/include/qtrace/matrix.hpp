#pragma once

#include <functional>
#include <vector>

#include "qtrace/torus.hpp"

namespace qtrace {

// Dense matrix over a (possibly noncommutative) ring; products keep factor order.
template <class T>
class Matrix {
 public:
  Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), zero_(fill), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const T& zero() const { return zero_; }
  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const {
    Matrix r(cols_, rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    Matrix<U> r(rows_, cols_, f(zero_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_;
  int cols_;
  T zero_;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<RootScalar>;
using TorusMatrix = Matrix<TorusElement>;

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error("mat_mul: dimension mismatch");
  Matrix<T> r(a.rows(), b.cols(), a.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      T acc = a.zero();
      for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("mat_add: dimension mismatch");
  Matrix<T> r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

template <class T, class S>
Matrix<T> mat_scale(const Matrix<T>& a, const S& c) {
  Matrix<T> r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * c;
  return r;
}

ScalarMatrix scalar_identity(int n);
TorusMatrix torus_identity(const SpecPtr& spec, int n);
TorusMatrix to_torus(const ScalarMatrix& m, const SpecPtr& spec);
ScalarMatrix kronecker(const ScalarMatrix& a, const ScalarMatrix& b);
// Inverse by elimination; every pivot must be a unit (signed power of h).
ScalarMatrix unit_pivot_inverse(const ScalarMatrix& m);

// Entry (i,j) of M_1 M_2 ... M_k where, for each index path, the factor of
// M_{order[0]} is multiplied first, then M_{order[1]}, and so on.
TorusMatrix chain_product(const std::vector<TorusMatrix>& mats, const std::vector<int>& order);

}  // namespace qtrace
