#include "qtrace/scalar.hpp"

#include <cmath>
#include <sstream>

namespace qtrace {

RootScalar::RootScalar(long c) {
  if (c != 0) terms_[0] = c;
}

RootScalar RootScalar::h_power(int k, long coeff) {
  RootScalar r;
  if (coeff != 0) r.terms_[k] = coeff;
  return r;
}

RootScalar RootScalar::term(int k, const mpz_class& coeff) {
  RootScalar r;
  r.add_term(k, coeff);
  return r;
}

RootScalar RootScalar::q_power(int n, int num, int den) {
  if (den == 0) throw Error("q_power: zero denominator");
  long top = 2L * n * n * num;
  if (top % den != 0) throw Error("q_power: exponent is not an integer power of h");
  return h_power(static_cast<int>(top / den));
}

bool RootScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool RootScalar::is_unit() const {
  if (terms_.size() != 1) return false;
  const mpz_class& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

RootScalar RootScalar::unit_inverse() const {
  if (!is_unit()) throw Error("unit_inverse: scalar is not a signed power of h");
  RootScalar r;
  r.terms_[-terms_.begin()->first] = terms_.begin()->second;
  return r;
}

int RootScalar::min_exponent() const {
  if (is_zero()) throw Error("min_exponent of zero");
  return terms_.begin()->first;
}

int RootScalar::max_exponent() const {
  if (is_zero()) throw Error("max_exponent of zero");
  return terms_.rbegin()->first;
}

void RootScalar::add_term(int k, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

RootScalar& RootScalar::operator+=(const RootScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

RootScalar& RootScalar::operator-=(const RootScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

RootScalar RootScalar::operator-() const {
  RootScalar r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

RootScalar operator*(const RootScalar& a, const RootScalar& b) {
  RootScalar r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

RootScalar& RootScalar::operator*=(const RootScalar& o) {
  *this = *this * o;
  return *this;
}

RootScalar RootScalar::pow(int e) const {
  if (e < 0) return unit_inverse().pow(-e);
  RootScalar r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

mpz_class RootScalar::at_one() const {
  mpz_class s = 0;
  for (const auto& kv : terms_) s += kv.second;
  return s;
}

double RootScalar::evaluate(double h) const {
  if (h == 0.0) throw Error("evaluate: h must be nonzero");
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += c.get_d() * std::pow(h, k);
  return s;
}

bool RootScalar::only_even_exponents() const {
  for (const auto& kv : terms_)
    if (kv.first % 2 != 0) return false;
  return true;
}

std::string RootScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "h^" << k;
  }
  return os.str();
}

}  // namespace qtrace
