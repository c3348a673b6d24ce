#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtrace/surface.hpp"

namespace qtrace {

// A malformed document. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct SurfaceFile {
  int n;
  IdealTriangulation triangulation;
};

// n: 3
// triangles: 2
// edges:
//   - {id: 0, incidences: [[0, 0], [1, 0]]}
//   - {id: 1, incidences: [[0, 1]], boundary: true, triangle_on_right: false}
SurfaceFile parse_surface(const std::string& text);

// arcs:
//   - {triangle: 0, from: 1, to: 2, turn: L, height: 0}
// biangles:
//   - edge: 0
//     left: [R, L]
//     slices:
//       - {uturn: 0, decreasing: true, clockwise: false}
//       - {crossing: 0, over: lower}
//       - {kink: 0, sign: positive}
// boundary_states:
//   - {edge: 1, states: [1, 3]}
//
// `left` may be omitted when a triangle lies on the left of the biangle; it is
// then read off the arcs. Crossing kinds follow from the strand directions at
// the slice and from which of the two strands passes over.
GoodPositionLink parse_link(const std::string& text, const IdealTriangulation& t);

// Canonical serialization of a trace. Monomials are dense exponent vectors in
// units of 1/n; coefficients map h-exponents to integers.
struct PolynomialFile {
  int n = 0;
  bool classical = false;
  std::vector<std::string> generators;
  std::map<Monomial, RootScalar> terms;
  bool operator==(const PolynomialFile&) const = default;
};

PolynomialFile polynomial_file(const TorusElement& p, bool classical);
std::string emit_polynomial(const PolynomialFile& p);
PolynomialFile parse_polynomial(const std::string& text);

// h^k written through q, q^{1/n} or omega when the exponent allows.
std::string render_h_power(int k, int n);
std::string render_coefficient(const RootScalar& c, int n);
std::string explain(const PolynomialFile& p);

}  // namespace qtrace
