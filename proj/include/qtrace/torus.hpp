#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qtrace/scalar.hpp"

namespace qtrace {

class QuantumTorusSpec {
 public:
  // P is row-major N x N and must be antisymmetric.
  QuantumTorusSpec(int n, int N, std::vector<int> P, std::vector<std::string> names = {});

  int n() const { return n_; }
  int size() const { return N_; }
  int P(int i, int j) const { return P_[static_cast<size_t>(i) * N_ + j]; }
  const std::vector<int>& matrix() const { return P_; }
  const std::string& name(int i) const { return names_[i]; }
  // Same root order and generator count with P = 0.
  std::shared_ptr<const QuantumTorusSpec> commutative() const;

 private:
  int n_;
  int N_;
  std::vector<int> P_;
  std::vector<std::string> names_;
};

using SpecPtr = std::shared_ptr<const QuantumTorusSpec>;

SpecPtr make_spec(int n, int N, std::vector<int> P, std::vector<std::string> names = {});

// Exponents in units of 1/n, read in increasing generator order.
using Monomial = std::vector<int>;

// h-exponent produced by moving every letter of b left past the letters of a.
int reorder_exponent(const QuantumTorusSpec& s, const Monomial& a, const Monomial& b);

class TorusElement {
 public:
  using Terms = std::map<Monomial, RootScalar>;

  explicit TorusElement(SpecPtr spec);
  TorusElement(SpecPtr spec, const RootScalar& c);
  TorusElement(SpecPtr spec, const Monomial& m, const RootScalar& c = RootScalar(1));
  // X_i^{m/n}
  static TorusElement generator(SpecPtr spec, int i, int m);

  const SpecPtr& spec() const { return spec_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // The constant term if the element is a scalar multiple of 1.
  bool is_scalar() const;
  RootScalar scalar_part() const;

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement operator-() const;
  TorusElement& operator*=(const RootScalar& c);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(TorusElement a, const RootScalar& c) { return a *= c; }
  friend TorusElement operator*(const RootScalar& c, TorusElement a) { return a *= c; }

  void add_term(const Monomial& m, const RootScalar& c);
  bool only_even_exponents() const;
  std::string to_string() const;

 private:
  SpecPtr spec_;
  Terms terms_;
};

TorusElement normal_product(const TorusElement& a, const TorusElement& b);
inline TorusElement operator*(const TorusElement& a, const TorusElement& b) { return normal_product(a, b); }
bool equals(const TorusElement& a, const TorusElement& b);
bool operator==(const TorusElement& a, const TorusElement& b);

struct Letter {
  int index;
  int exponent;  // units of 1/n
};
using Word = std::vector<Letter>;

TorusElement weyl_order(const Word& w, const SpecPtr& spec);
// Weyl lift of the commutative monomial with exponent vector m.
TorusElement weyl_monomial(const Monomial& m, const SpecPtr& spec);
// Term-by-term Weyl lift of an element of the commutative algebra into spec.
TorusElement weyl_lift(const TorusElement& classical, const SpecPtr& spec);

// h = 1: image in the commutative algebra with the same generators.
TorusElement specialize_classical(const TorusElement& a);
// Numeric evaluation of the normal-ordered representative.
double specialize_numeric(const TorusElement& a, double h, const std::vector<double>& x);

}  // namespace qtrace
