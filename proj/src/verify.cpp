#include "qtrace/verify.hpp"

#include <sstream>

#include "qtrace/biangle.hpp"
#include "qtrace/moves.hpp"
#include "qtrace/qmatrix.hpp"
#include "qtrace/quiver.hpp"
#include "qtrace/ribbon.hpp"

namespace qtrace {

namespace {

TorusMatrix turn_matrix(int n, Turn turn, bool weyl) {
  TriangleTorusSpec t = triangle_poisson(n);
  TurnLabels labels = arc_labels(t.triangle, turn, 0, [&](const Vertex& v) { return t.index(v); });
  if (weyl) return quantum_turn_matrix(turn, labels, t.spec);
  // The bottom right entry is the determinant normalization D^{-1/n} alone;
  // dividing it out of every entry leaves the matrix with D = 1.
  TorusMatrix c = classical_turn_matrix(turn, labels, t.spec->commutative());
  const Monomial& d = c(n - 1, n - 1).terms().begin()->first;
  return c.map([&](const TorusElement& e) {
    TorusElement r(t.spec->commutative());
    for (const auto& [m, a] : e.terms()) {
      Monomial x = m;
      for (size_t i = 0; i < x.size(); ++i) x[i] -= d[i];
      r.add_term(x, a);
    }
    return weyl_lift(r, t.spec);
  });
}

void require_n(int n, int lo, int hi, const std::string& suite) {
  if (n < lo || n > hi)
    throw Error("suite " + suite + " supports n from " + std::to_string(lo) + " to " + std::to_string(hi));
}

ScalarMatrix at_one(const ScalarMatrix& m) {
  return m.map([](const RootScalar& c) { return RootScalar::term(0, c.at_one()); });
}

}  // namespace

TorusMatrix triangle_turn_matrix(int n, Turn turn) { return turn_matrix(n, turn, true); }
TorusMatrix unnormalized_turn_matrix(int n, Turn turn) { return turn_matrix(n, turn, false); }

std::vector<CheckResult> verify_matrices(int n) {
  require_n(n, 2, 4, "matrices");
  std::vector<CheckResult> out;
  for (Turn turn : {Turn::Left, Turn::Right}) {
    std::string tag = turn == Turn::Left ? "L" : "R";
    QuantumMatrixWitness w = quantum_matrix_witness(triangle_turn_matrix(n, turn));
    int bad = 0;
    for (const MinorResult& m : w.minors) bad += m.ok ? 0 : 1;
    out.push_back({"matrices", tag + " 2x2 minor relations", w.all_minors_ok(),
                   std::to_string(w.minors.size() - bad) + " of " + std::to_string(w.minors.size()) + " minors"});
    out.push_back({"matrices", tag + " quantum determinant is 1", w.determinant_is_one(),
                   w.determinant_is_one() ? "" : w.determinant.to_string()});
  }
  if (n == 3) {
    QuantumMatrixWitness w = quantum_matrix_witness(unnormalized_turn_matrix(n, Turn::Left));
    out.push_back({"matrices", "L with the determinant normalization removed is rejected", !w.all_minors_ok() || !w.determinant_is_one(),
                   w.all_minors_ok() ? "all minors hold" : "some minor relation fails"});
  }
  return out;
}

std::vector<CheckResult> verify_skein(int n) {
  require_n(n, 2, 4, "skein");
  std::vector<CheckResult> out;
  SkeinReport s = skein_checks(n);
  out.push_back({"skein", "q^{-1/n} C - q^{1/n} C^-1 = (q^-1 - q) Id", s.homflypt, ""});
  out.push_back({"skein", "unknot is (-1)^{n-1} [n]_q", s.unknot, RibbonConstants::of(n).quantum_n.to_string()});
  out.push_back({"skein", "opposite kinks cancel", s.kinks_cancel, ""});
  out.push_back({"skein", "curl equals kink factor", s.curl_matches_kink, s.detail});

  ScalarMatrix id2 = scalar_identity(n * n);
  ScalarMatrix cs = crossing_same(n), co = crossing_opp(n);
  out.push_back({"skein", "C_same inverse", mat_mul(cs, crossing_same_inverse(n)) == id2 &&
                                                mat_mul(crossing_same_inverse(n), cs) == id2, ""});
  out.push_back({"skein", "C_opp inverse", mat_mul(co, crossing_opp_inverse(n)) == id2 &&
                                               mat_mul(crossing_opp_inverse(n), co) == id2, ""});
  ScalarMatrix id = scalar_identity(n);
  ScalarMatrix a = kronecker(cs, id), b = kronecker(id, cs);
  out.push_back({"skein", "Yang-Baxter for C_same", mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b), ""});
  out.push_back({"skein", "C_same equals C_opp at h = 1", at_one(cs) == at_one(co), ""});
  return out;
}

std::vector<CheckResult> verify_duality(int n) {
  require_n(n, 2, 4, "duality");
  RibbonConstants rc = RibbonConstants::of(n);
  RootScalar plus = rc.sigma_bar * RootScalar::q_power(n, n - 1, 2);
  auto show = [](const DualityReport& r) {
    auto b = [](bool x) { return x ? "holds" : "fails"; };
    return std::string("b' ") + b(r.b_prime) + ", d' " + b(r.d_prime) + ", b " + b(r.b) + ", d " + b(r.d);
  };
  DualityReport p = duality_lemma(n, plus), m = duality_lemma(n, -plus), one = duality_lemma(n, RootScalar(1));
  return {{"duality", "coefficient identities at lambda+", p.all(), show(p)},
          {"duality", "coefficient identities at lambda-", m.all(), show(m)},
          {"duality", "identities fail at lambda = 1", !one.all(), show(one)}};
}

std::vector<CheckResult> verify_move_suite() {
  std::vector<CheckResult> out;
  for (const MoveResult& r : verify_moves()) out.push_back({"moves", "Move " + r.name, r.pass, r.detail});
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, int n) {
  if (suite == "matrices") return verify_matrices(n);
  if (suite == "skein") return verify_skein(n);
  if (suite == "duality") return verify_duality(n);
  if (suite == "moves") {
    if (n != 3) throw Error("suite moves supports n = 3 only");
    return verify_move_suite();
  }
  if (suite == "all") {
    std::vector<CheckResult> out = verify_matrices(n);
    for (auto part : {verify_skein(n), verify_duality(n)}) out.insert(out.end(), part.begin(), part.end());
    if (n == 3) {
      std::vector<CheckResult> mv = verify_move_suite();
      out.insert(out.end(), mv.begin(), mv.end());
    }
    return out;
  }
  throw Error("unknown suite '" + suite + "'");
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const CheckResult& r : results) {
    passed += r.pass ? 1 : 0;
    os << (r.pass ? "pass  " : "FAIL  ") << r.suite << ": " << r.name;
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
  }
  os << passed << " of " << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace qtrace
