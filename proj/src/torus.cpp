#include "qtrace/torus.hpp"

#include <cmath>
#include <sstream>

namespace qtrace {

QuantumTorusSpec::QuantumTorusSpec(int n, int N, std::vector<int> P, std::vector<std::string> names)
    : n_(n), N_(N), P_(std::move(P)), names_(std::move(names)) {
  if (n < 1) throw Error("torus spec: root order must be positive");
  if (N < 0 || P_.size() != static_cast<size_t>(N) * N) throw Error("torus spec: P has wrong shape");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (this->P(i, j) != -this->P(j, i)) throw Error("torus spec: P is not antisymmetric");
  if (names_.empty())
    for (int i = 0; i < N; ++i) names_.push_back("X" + std::to_string(i));
  if (static_cast<int>(names_.size()) != N) throw Error("torus spec: name count mismatch");
}

std::shared_ptr<const QuantumTorusSpec> QuantumTorusSpec::commutative() const {
  return make_spec(n_, N_, std::vector<int>(P_.size(), 0), names_);
}

SpecPtr make_spec(int n, int N, std::vector<int> P, std::vector<std::string> names) {
  return std::make_shared<const QuantumTorusSpec>(n, N, std::move(P), std::move(names));
}

int reorder_exponent(const QuantumTorusSpec& s, const Monomial& a, const Monomial& b) {
  int N = s.size();
  long total = 0;
  for (int i = 0; i < N; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < i; ++j) {
      if (b[j] == 0) continue;
      total += static_cast<long>(s.P(i, j)) * a[i] * b[j];
    }
  }
  return static_cast<int>(2 * total);
}

TorusElement::TorusElement(SpecPtr spec) : spec_(std::move(spec)) {
  if (!spec_) throw Error("torus element without spec");
}

TorusElement::TorusElement(SpecPtr spec, const RootScalar& c) : TorusElement(std::move(spec)) {
  add_term(Monomial(spec_->size(), 0), c);
}

TorusElement::TorusElement(SpecPtr spec, const Monomial& m, const RootScalar& c)
    : TorusElement(std::move(spec)) {
  if (static_cast<int>(m.size()) != spec_->size()) throw Error("monomial length mismatch");
  add_term(m, c);
}

TorusElement TorusElement::generator(SpecPtr spec, int i, int m) {
  if (i < 0 || i >= spec->size()) throw Error("generator index out of range");
  Monomial e(spec->size(), 0);
  e[i] = m;
  return TorusElement(std::move(spec), e);
}

bool TorusElement::is_scalar() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int v : terms_.begin()->first)
    if (v != 0) return false;
  return true;
}

RootScalar TorusElement::scalar_part() const {
  auto it = terms_.find(Monomial(spec_->size(), 0));
  return it == terms_.end() ? RootScalar() : it->second;
}

void TorusElement::add_term(const Monomial& m, const RootScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

static void require_same(const TorusElement& a, const TorusElement& b) {
  if (a.spec() != b.spec() && !(a.spec()->size() == b.spec()->size() && a.spec()->n() == b.spec()->n() &&
                                a.spec()->matrix() == b.spec()->matrix()))
    throw Error("torus spec mismatch");
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

TorusElement& TorusElement::operator*=(const RootScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

bool TorusElement::only_even_exponents() const {
  for (const auto& kv : terms_)
    if (!kv.second.only_even_exponents()) return false;
  return true;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) os << "*" << spec_->name(static_cast<int>(i)) << "^(" << m[i] << "/" << spec_->n() << ")";
  }
  return os.str();
}

TorusElement normal_product(const TorusElement& a, const TorusElement& b) {
  require_same(a, b);
  TorusElement r(a.spec());
  const QuantumTorusSpec& s = *a.spec();
  Monomial sum(s.size());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (int i = 0; i < s.size(); ++i) sum[i] = ma[i] + mb[i];
      int k = reorder_exponent(s, ma, mb);
      r.add_term(sum, RootScalar::h_power(k) * ca * cb);
    }
  }
  return r;
}

bool equals(const TorusElement& a, const TorusElement& b) {
  require_same(a, b);
  return a.terms() == b.terms();
}

bool operator==(const TorusElement& a, const TorusElement& b) { return equals(a, b); }

TorusElement weyl_order(const Word& w, const SpecPtr& spec) {
  long correction = 0;
  TorusElement prod(spec, RootScalar(1));
  for (size_t a = 0; a < w.size(); ++a) {
    if (w[a].index < 0 || w[a].index >= spec->size()) throw Error("weyl_order: index out of range");
    for (size_t b = a + 1; b < w.size(); ++b)
      correction += static_cast<long>(spec->P(w[a].index, w[b].index)) * w[a].exponent * w[b].exponent;
    prod = normal_product(prod, TorusElement::generator(spec, w[a].index, w[a].exponent));
  }
  return prod * RootScalar::h_power(static_cast<int>(-correction));
}

TorusElement weyl_monomial(const Monomial& m, const SpecPtr& spec) {
  if (static_cast<int>(m.size()) != spec->size()) throw Error("weyl_monomial: length mismatch");
  long correction = 0;
  for (int i = 0; i < spec->size(); ++i) {
    if (m[i] == 0) continue;
    for (int j = i + 1; j < spec->size(); ++j)
      correction += static_cast<long>(spec->P(i, j)) * m[i] * m[j];
  }
  return TorusElement(spec, m, RootScalar::h_power(static_cast<int>(-correction)));
}

TorusElement weyl_lift(const TorusElement& classical, const SpecPtr& spec) {
  TorusElement r(spec);
  for (const auto& [m, c] : classical.terms()) r += weyl_monomial(m, spec) * c;
  return r;
}

TorusElement specialize_classical(const TorusElement& a) {
  TorusElement r(a.spec()->commutative());
  for (const auto& [m, c] : a.terms()) r.add_term(m, RootScalar::term(0, c.at_one()));
  return r;
}

double specialize_numeric(const TorusElement& a, double h, const std::vector<double>& x) {
  if (h == 0.0) throw Error("specialize: h must be nonzero");
  if (static_cast<int>(x.size()) != a.spec()->size()) throw Error("specialize: wrong number of values");
  double n = a.spec()->n();
  double total = 0.0;
  for (const auto& [m, c] : a.terms()) {
    double v = c.evaluate(h);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) v *= std::pow(x[i], m[i] / n);
    total += v;
  }
  return total;
}

}  // namespace qtrace
