#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace qtrace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Laurent polynomial in h = omega^{1/2} with integer coefficients.
// q = h^{2n^2}, q^{1/n} = h^{2n}, omega = h^2.
class RootScalar {
 public:
  using Terms = std::map<int, mpz_class>;

  RootScalar() = default;
  RootScalar(long c);  // NOLINT: constants convert implicitly
  static RootScalar h_power(int k, long coeff = 1);
  static RootScalar term(int k, const mpz_class& coeff);
  // q^{num/den} for root order n; throws if not an integer power of h.
  static RootScalar q_power(int n, int num, int den = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // A single term with coefficient +1 or -1.
  bool is_unit() const;
  RootScalar unit_inverse() const;
  int min_exponent() const;
  int max_exponent() const;

  RootScalar& operator+=(const RootScalar& o);
  RootScalar& operator-=(const RootScalar& o);
  RootScalar& operator*=(const RootScalar& o);
  RootScalar operator-() const;
  friend RootScalar operator+(RootScalar a, const RootScalar& b) { return a += b; }
  friend RootScalar operator-(RootScalar a, const RootScalar& b) { return a -= b; }
  friend RootScalar operator*(const RootScalar& a, const RootScalar& b);
  friend bool operator==(const RootScalar& a, const RootScalar& b) { return a.terms_ == b.terms_; }

  RootScalar pow(int e) const;  // negative e only for units
  mpz_class at_one() const;
  double evaluate(double h) const;
  bool only_even_exponents() const;
  std::string to_string() const;

 private:
  void add_term(int k, const mpz_class& c);
  Terms terms_;
};

}  // namespace qtrace
