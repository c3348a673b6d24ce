#include "qtrace/formats.hpp"

#include <yaml-cpp/yaml.h>

#include <numeric>
#include <set>
#include <sstream>

#include "qtrace/biangle.hpp"

namespace qtrace {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + message : message),
      line_(line),
      column_(column) {}

namespace {

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& message) {
  YAML::Mark m = node.Mark();
  if (m.is_null()) throw ParseError(message, 0, 0);
  throw ParseError(message, m.line + 1, m.column + 1);
}

YAML::Node load(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
}

void expect_map(const YAML::Node& node, const std::string& what, std::initializer_list<const char*> keys) {
  if (!node.IsMap()) fail_at(node, what + " must be a mapping");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& kv : node) {
    std::string k = kv.first.Scalar();
    if (!allowed.count(k)) fail_at(kv.first, "unknown key '" + k + "' in " + what);
  }
}

YAML::Node require(const YAML::Node& map, const std::string& key, const std::string& what) {
  const YAML::Node& c = map;
  YAML::Node v = c[key];
  if (!v) fail_at(map, what + " lacks '" + key + "'");
  return v;
}

YAML::Node optional(const YAML::Node& map, const std::string& key) {
  const YAML::Node& c = map;
  return c[key];
}

YAML::Node expect_seq(const YAML::Node& node, const std::string& what) {
  if (!node.IsSequence()) fail_at(node, what + " must be a list");
  return node;
}

int as_int(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail_at(node, what + " must be an integer");
  try {
    return node.as<int>();
  } catch (const YAML::Exception&) {
    fail_at(node, what + " must be an integer, got '" + node.Scalar() + "'");
  }
}

bool as_bool(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail_at(node, what + " must be true or false");
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    fail_at(node, what + " must be true or false, got '" + node.Scalar() + "'");
  }
}

std::string as_word(const YAML::Node& node, const std::string& what, std::initializer_list<const char*> choices) {
  std::string all;
  for (const char* c : choices) all += std::string(all.empty() ? "" : ", ") + c;
  if (node.IsScalar())
    for (const char* c : choices)
      if (node.Scalar() == c) return c;
  fail_at(node, what + " must be one of " + all);
}

Dir as_dir(const YAML::Node& node) { return as_word(node, "strand direction", {"R", "L"}) == "R" ? Dir::Right : Dir::Left; }

Incidence parse_incidence(const YAML::Node& node, int triangles) {
  expect_seq(node, "incidence");
  if (node.size() != 2) fail_at(node, "incidence must be [triangle, side]");
  int t = as_int(node[0], "triangle");
  int s = as_int(node[1], "side");
  if (t < 0 || t >= triangles) fail_at(node[0], "triangle " + std::to_string(t) + " out of range");
  if (s < 0 || s > 2) fail_at(node[1], "side must be 0, 1 or 2");
  return {t, s};
}

Slice parse_slice(const YAML::Node& node, const BiangleDiagram& before) {
  if (!node.IsMap()) fail_at(node, "slice must be a mapping");
  const YAML::Node& c = node;
  if (c["uturn"]) {
    expect_map(node, "U-turn slice", {"uturn", "decreasing", "clockwise"});
    return Slice::make_uturn(as_int(c["uturn"], "position"),
                             {as_bool(require(node, "decreasing", "U-turn slice"), "decreasing"),
                              as_bool(require(node, "clockwise", "U-turn slice"), "clockwise")});
  }
  if (c["kink"]) {
    expect_map(node, "kink slice", {"kink", "sign"});
    bool positive = as_word(require(node, "sign", "kink slice"), "kink sign", {"positive", "negative"}) == "positive";
    return Slice::make_kink(as_int(c["kink"], "position"), positive);
  }
  if (c["crossing"]) {
    expect_map(node, "crossing slice", {"crossing", "over"});
    int p = as_int(c["crossing"], "position");
    bool lower_over = as_word(require(node, "over", "crossing slice"), "over", {"lower", "upper"}) == "lower";
    std::vector<Dir> at = before.left;
    if (!before.slices.empty()) at = cuts(before).back();
    if (p < 0 || p + 1 >= static_cast<int>(at.size()))
      fail_at(c["crossing"], "no strand pair at position " + std::to_string(p));
    return Slice::make_crossing(p, crossing_kind_from(at[p], at[p + 1], lower_over));
  }
  fail_at(node, "slice needs one of uturn, crossing, kink");
}

}  // namespace

SurfaceFile parse_surface(const std::string& text) {
  YAML::Node root = load(text);
  expect_map(root, "surface", {"n", "triangles", "edges"});
  int n = as_int(require(root, "n", "surface"), "n");
  if (n < 2) fail_at(root["n"], "n must be at least 2");
  YAML::Node tri = require(root, "triangles", "surface");
  int triangles = as_int(tri, "triangle count");
  if (triangles < 1) fail_at(tri, "triangle count must be positive");
  YAML::Node edges = expect_seq(require(root, "edges", "surface"), "edges");
  std::vector<EdgeRecord> records;
  for (const YAML::Node& e : edges) {
    expect_map(e, "edge", {"id", "incidences", "boundary", "triangle_on_right"});
    EdgeRecord r;
    r.id = as_int(require(e, "id", "edge"), "edge id");
    YAML::Node inc = expect_seq(require(e, "incidences", "edge"), "incidences");
    for (const YAML::Node& i : inc) r.incidences.push_back(parse_incidence(i, triangles));
    if (YAML::Node b = optional(e, "boundary")) r.boundary = as_bool(b, "boundary");
    if (YAML::Node b = optional(e, "triangle_on_right")) r.triangle_on_right = as_bool(b, "triangle_on_right");
    size_t expected = r.boundary ? 1 : 2;
    if (r.incidences.size() != expected)
      fail_at(inc, std::string(r.boundary ? "a boundary" : "an internal") + " edge needs " +
                       std::to_string(expected) + (expected == 1 ? " incidence" : " incidences"));
    records.push_back(r);
  }
  try {
    return {n, IdealTriangulation(triangles, records)};
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail_at(edges, e.what());
  }
}

GoodPositionLink parse_link(const std::string& text, const IdealTriangulation& t) {
  YAML::Node root = load(text);
  GoodPositionLink link;
  if (root.IsNull()) return link;
  expect_map(root, "link", {"arcs", "biangles", "boundary_states"});
  if (YAML::Node arcs = optional(root, "arcs")) {
    for (const YAML::Node& a : expect_seq(arcs, "arcs")) {
      expect_map(a, "arc", {"triangle", "from", "to", "turn", "height"});
      TriangleArc arc;
      arc.triangle = as_int(require(a, "triangle", "arc"), "triangle");
      arc.entry_side = as_int(require(a, "from", "arc"), "side");
      arc.exit_side = as_int(require(a, "to", "arc"), "side");
      arc.turn = as_word(require(a, "turn", "arc"), "turn", {"L", "R"}) == "L" ? Turn::Left : Turn::Right;
      arc.height = as_int(require(a, "height", "arc"), "height");
      if (arc.triangle < 0 || arc.triangle >= t.triangle_count()) fail_at(a["triangle"], "triangle out of range");
      if (arc.entry_side < 0 || arc.entry_side > 2) fail_at(a["from"], "side must be 0, 1 or 2");
      if (arc.exit_side < 0 || arc.exit_side > 2) fail_at(a["to"], "side must be 0, 1 or 2");
      link.arcs.push_back(arc);
    }
  }
  SplitModel split = split_triangulation(t);
  if (YAML::Node bs = optional(root, "biangles")) {
    for (const YAML::Node& b : expect_seq(bs, "biangles")) {
      expect_map(b, "biangle", {"edge", "left", "slices"});
      YAML::Node edge = require(b, "edge", "biangle");
      int id = as_int(edge, "edge id");
      const SplitBiangle* sb = nullptr;
      for (const SplitBiangle& s : split.biangles)
        if (s.edge_id == id) sb = &s;
      if (!sb) fail_at(edge, "unknown edge " + std::to_string(id));
      if (link.biangles.count(id)) fail_at(edge, "edge " + std::to_string(id) + " listed twice");
      BiangleDiagram d;
      if (YAML::Node left = optional(b, "left")) {
        for (const YAML::Node& x : expect_seq(left, "left strands")) d.left.push_back(as_dir(x));
      } else if (sb->left.triangle >= 0) {
        for (const ArcEnd& e : side_endpoints(link, sb->left.triangle, sb->left.side))
          d.left.push_back(e.exit ? Dir::Right : Dir::Left);
      } else {
        fail_at(b, "left strands must be listed when the left side is the surface boundary");
      }
      if (YAML::Node slices = optional(b, "slices")) {
        for (const YAML::Node& s : expect_seq(slices, "slices")) {
          try {
            d.slices.push_back(parse_slice(s, d));
          } catch (const ParseError&) {
            throw;
          } catch (const Error& e) {
            throw Error("edge " + std::to_string(id) + ": " + e.what());
          }
        }
      }
      link.biangles[id] = d;
    }
  }
  if (YAML::Node st = optional(root, "boundary_states")) {
    for (const YAML::Node& s : expect_seq(st, "boundary_states")) {
      expect_map(s, "boundary states", {"edge", "states"});
      int id = as_int(require(s, "edge", "boundary states"), "edge id");
      StateVector v;
      for (const YAML::Node& x : expect_seq(require(s, "states", "boundary states"), "states"))
        v.push_back(as_int(x, "state"));
      if (link.boundary_states.count(id)) fail_at(s, "states for edge " + std::to_string(id) + " given twice");
      link.boundary_states[id] = v;
    }
  }
  return link;
}

PolynomialFile polynomial_file(const TorusElement& p, bool classical) {
  PolynomialFile f;
  const SpecPtr& s = p.spec();
  f.n = s->n();
  f.classical = classical;
  for (int i = 0; i < s->size(); ++i) f.generators.push_back(s->name(i));
  const TorusElement src = classical ? specialize_classical(p) : p;
  for (const auto& [m, c] : src.terms()) f.terms[m] = c;
  return f;
}

std::string emit_polynomial(const PolynomialFile& p) {
  std::ostringstream os;
  os << "n: " << p.n << "\n";
  os << "classical: " << (p.classical ? "true" : "false") << "\n";
  os << "generators: [";
  for (size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : "") << p.generators[i];
  os << "]\n";
  if (p.terms.empty()) {
    os << "terms: []\n";
    return os.str();
  }
  os << "terms:\n";
  for (const auto& [m, c] : p.terms) {
    os << "  - monomial: [";
    for (size_t i = 0; i < m.size(); ++i) os << (i ? ", " : "") << m[i];
    os << "]\n    coefficient: {";
    bool first = true;
    for (const auto& [k, a] : c.terms()) {
      os << (first ? "" : ", ") << k << ": " << a.get_str();
      first = false;
    }
    os << "}\n";
  }
  return os.str();
}

PolynomialFile parse_polynomial(const std::string& text) {
  YAML::Node root = load(text);
  expect_map(root, "polynomial", {"n", "classical", "generators", "terms"});
  PolynomialFile p;
  p.n = as_int(require(root, "n", "polynomial"), "n");
  if (p.n < 1) fail_at(root["n"], "n must be positive");
  p.classical = as_bool(require(root, "classical", "polynomial"), "classical");
  for (const YAML::Node& g : expect_seq(require(root, "generators", "polynomial"), "generators")) {
    if (!g.IsScalar()) fail_at(g, "generator name must be a word");
    p.generators.push_back(g.Scalar());
  }
  for (const YAML::Node& t : expect_seq(require(root, "terms", "polynomial"), "terms")) {
    expect_map(t, "term", {"monomial", "coefficient"});
    YAML::Node mono = expect_seq(require(t, "monomial", "term"), "monomial");
    Monomial m;
    for (const YAML::Node& e : mono) m.push_back(as_int(e, "exponent"));
    if (m.size() != p.generators.size())
      fail_at(mono, "monomial has " + std::to_string(m.size()) + " exponents for " +
                        std::to_string(p.generators.size()) + " generators");
    YAML::Node coeff = require(t, "coefficient", "term");
    if (!coeff.IsMap()) fail_at(coeff, "coefficient must map h-exponents to integers");
    RootScalar c;
    for (const auto& kv : coeff) {
      int k = as_int(kv.first, "h-exponent");
      mpz_class a;
      if (!kv.second.IsScalar() || a.set_str(kv.second.Scalar(), 10) != 0)
        fail_at(kv.second, "coefficient must be an integer");
      c += RootScalar::term(k, a);
    }
    if (p.terms.count(m)) fail_at(mono, "monomial listed twice");
    if (!c.is_zero()) p.terms[m] = c;
  }
  return p;
}

std::string render_h_power(int k, int n) {
  if (k == 0) return "1";
  auto power = [](const std::string& base, int num, int den) {
    int g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den == 1) return num == 1 ? base : num > 0 ? base + "^" + std::to_string(num) : base + "^{" + std::to_string(num) + "}";
    return base + "^{" + std::to_string(num) + "/" + std::to_string(den) + "}";
  };
  if (k % (2 * n) == 0) return power("q", k / (2 * n), n);
  if (k % 2 == 0) return power("ω", k / 2, 1);
  return power("h", k, 1);
}

std::string render_coefficient(const RootScalar& c, int n) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& [k, a] : c.terms()) {
    mpz_class abs_a = abs(a);
    if (s.empty())
      s += a < 0 ? "-" : "";
    else
      s += a < 0 ? " - " : " + ";
    std::string pw = render_h_power(k, n);
    if (pw == "1")
      s += abs_a.get_str();
    else
      s += (abs_a == 1 ? "" : abs_a.get_str() + " ") + pw;
  }
  return s;
}

std::string explain(const PolynomialFile& p) {
  std::ostringstream os;
  os << (p.classical ? "classical" : "quantum") << " trace, n = " << p.n << ", " << p.terms.size()
     << (p.terms.size() == 1 ? " term\n" : " terms\n");
  if (p.terms.empty()) os << "  0\n";
  for (const auto& [m, c] : p.terms) {
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      int g = std::gcd(m[i], p.n);
      int num = m[i] / g, den = p.n / g;
      mono += " " + p.generators[i];
      if (den != 1)
        mono += "^{" + std::to_string(num) + "/" + std::to_string(den) + "}";
      else if (num < 0)
        mono += "^{" + std::to_string(num) + "}";
      else if (num != 1)
        mono += "^" + std::to_string(num);
    }
    std::string coeff = render_coefficient(c, p.n);
    bool compound = c.terms().size() > 1;
    if (mono.empty())
      os << "  " << coeff << "\n";
    else if (compound)
      os << "  (" << coeff << ")" << mono << "\n";
    else if (coeff == "1" || coeff == "-1")
      os << "  " << (coeff == "1" ? "" : "-") << mono.substr(1) << "\n";
    else
      os << "  " << coeff << mono << "\n";
  }
  return os.str();
}

}  // namespace qtrace
