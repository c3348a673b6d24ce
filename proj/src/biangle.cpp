#include "qtrace/biangle.hpp"

#include <algorithm>
#include <sstream>

namespace qtrace {

CrossingKind crossing_kind_from(Dir a, Dir b, bool a_over) {
  // Planar directions: A runs between (0, p) and (1, p+1), B between (0, p+1) and (1, p).
  int ax = a == Dir::Right ? 1 : -1, ay = ax;
  int bx = b == Dir::Right ? 1 : -1, by = -bx;
  int ox = a_over ? ax : bx, oy = a_over ? ay : by;
  int ux = a_over ? bx : ax, uy = a_over ? by : ay;
  bool positive = ox * uy - oy * ux > 0;
  bool over_to_lower = a_over ? a == Dir::Left : b == Dir::Right;
  return {positive, a == b, over_to_lower};
}

namespace {

std::string where(size_t k) { return "slice " + std::to_string(k) + ": "; }

bool same_kind(const CrossingKind& x, const CrossingKind& y) {
  return x.positive == y.positive && x.same_direction == y.same_direction && x.over_to_lower == y.over_to_lower;
}

}  // namespace

std::vector<std::vector<Dir>> cuts(const BiangleDiagram& d) {
  std::vector<std::vector<Dir>> out{d.left};
  std::vector<Dir> cur = d.left;
  for (size_t k = 0; k < d.slices.size(); ++k) {
    const Slice& s = d.slices[k];
    int m = static_cast<int>(cur.size());
    switch (s.type) {
      case Slice::Type::UTurn:
        if (s.uturn.endpoints_on_left()) {
          if (s.pos < 0 || s.pos + 1 >= m) throw Error(where(k) + "U-turn position out of range");
          Dir lo = cur[s.pos], hi = cur[s.pos + 1];
          bool ok = s.uturn.decreasing ? (hi == Dir::Right && lo == Dir::Left) : (lo == Dir::Right && hi == Dir::Left);
          if (!ok) throw Error(where(k) + "U-turn orientation does not match the strands it closes");
          cur.erase(cur.begin() + s.pos, cur.begin() + s.pos + 2);
        } else {
          if (s.pos < 0 || s.pos > m) throw Error(where(k) + "U-turn position out of range");
          Dir lo = s.uturn.decreasing ? Dir::Right : Dir::Left;
          cur.insert(cur.begin() + s.pos, {lo, flip(lo)});
        }
        break;
      case Slice::Type::Crossing: {
        if (s.pos < 0 || s.pos + 1 >= m) throw Error(where(k) + "crossing position out of range");
        Dir a = cur[s.pos], b = cur[s.pos + 1];
        if (!same_kind(s.crossing, crossing_kind_from(a, b, true)) &&
            !same_kind(s.crossing, crossing_kind_from(a, b, false)))
          throw Error(where(k) + "crossing kind is inconsistent with the strand orientations");
        std::swap(cur[s.pos], cur[s.pos + 1]);
        break;
      }
      case Slice::Type::Kink:
        if (s.pos < 0 || s.pos >= m) throw Error(where(k) + "kink position out of range");
        break;
      case Slice::Type::Trivial:
        if (s.pos < 0 || s.pos >= m) throw Error(where(k) + "strand position out of range");
        if (cur[s.pos] != s.orientation) throw Error(where(k) + "trivial strand has the wrong orientation");
        break;
    }
    out.push_back(cur);
  }
  return out;
}

std::vector<Dir> right_boundary(const BiangleDiagram& d) { return cuts(d).back(); }

namespace {

using Vec = std::map<StateVector, RootScalar>;

void accumulate(Vec& v, const StateVector& s, const RootScalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(s);
  if (it == v.end()) {
    v.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

Vec propagate(const BiangleDiagram& d, int n, Vec cur) {
  const RibbonConstants rc = RibbonConstants::of(n);
  for (const Slice& s : d.slices) {
    Vec next;
    switch (s.type) {
      case Slice::Type::UTurn: {
        ScalarMatrix u = uturn_matrix(s.uturn, n);
        // Incoming endpoint: the higher one for decreasing U-turns.
        bool in_high = s.uturn.decreasing;
        if (s.uturn.endpoints_on_left()) {
          for (const auto& [st, c] : cur) {
            int lo = st[s.pos], hi = st[s.pos + 1];
            const RootScalar& f = in_high ? u(hi - 1, lo - 1) : u(lo - 1, hi - 1);
            if (f.is_zero()) continue;
            StateVector ns = st;
            ns.erase(ns.begin() + s.pos, ns.begin() + s.pos + 2);
            accumulate(next, ns, c * f);
          }
        } else {
          for (const auto& [st, c] : cur)
            for (int lo = 1; lo <= n; ++lo)
              for (int hi = 1; hi <= n; ++hi) {
                const RootScalar& f = in_high ? u(hi - 1, lo - 1) : u(lo - 1, hi - 1);
                if (f.is_zero()) continue;
                StateVector ns = st;
                ns.insert(ns.begin() + s.pos, {lo, hi});
                accumulate(next, ns, c * f);
              }
        }
        break;
      }
      case Slice::Type::Crossing: {
        ScalarMatrix x = crossing_matrix(s.crossing, n);
        for (const auto& [st, c] : cur) {
          int row = (st[s.pos] - 1) * n + (st[s.pos + 1] - 1);
          for (int col = 0; col < n * n; ++col) {
            const RootScalar& f = x(row, col);
            if (f.is_zero()) continue;
            StateVector ns = st;
            ns[s.pos] = col / n + 1;
            ns[s.pos + 1] = col % n + 1;
            accumulate(next, ns, c * f);
          }
        }
        break;
      }
      case Slice::Type::Kink:
        for (const auto& [st, c] : cur) accumulate(next, st, c * (s.positive_kink ? rc.zeta_bar : rc.zeta_bar_inv));
        break;
      case Slice::Type::Trivial:
        next = cur;
        break;
    }
    cur = std::move(next);
  }
  return cur;
}

void check_states(const StateVector& s, size_t arity, int n) {
  if (s.size() != arity) throw Error("state arity mismatch");
  for (int v : s)
    if (v < 1 || v > n) throw Error("state out of range");
}

}  // namespace

RootScalar biangle_trace(const BiangleDiagram& d, int n, const StateVector& left, const StateVector& right) {
  std::vector<Dir> rb = right_boundary(d);
  check_states(left, d.left.size(), n);
  check_states(right, rb.size(), n);
  Vec out = propagate(d, n, Vec{{left, RootScalar(1)}});
  auto it = out.find(right);
  return it == out.end() ? RootScalar() : it->second;
}

BiangleTensor biangle_tensor(const BiangleDiagram& d, int n) {
  right_boundary(d);
  BiangleTensor t;
  size_t m = d.left.size();
  StateVector s(m, 1);
  while (true) {
    for (const auto& [r, c] : propagate(d, n, Vec{{s, RootScalar(1)}})) t.emplace(std::make_pair(s, r), c);
    size_t k = 0;
    while (k < m && s[k] == n) s[k++] = 1;
    if (k == m) break;
    ++s[k];
  }
  return t;
}

namespace {

// Crossings carrying the strands at a cut from order `from` to order `to`
// (lists of height ranks); at each crossing the higher-ranked strand is over.
std::vector<Slice> slide(std::vector<int> order, const std::vector<int>& to, std::vector<Dir> dirs) {
  std::vector<Slice> out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p + 1 < order.size(); ++p) {
      auto rank = [&](int v) { return std::find(to.begin(), to.end(), v) - to.begin(); };
      if (rank(order[p]) > rank(order[p + 1])) {
        out.push_back(Slice::make_crossing(static_cast<int>(p),
                                           crossing_kind_from(dirs[p], dirs[p + 1], order[p] > order[p + 1])));
        std::swap(order[p], order[p + 1]);
        std::swap(dirs[p], dirs[p + 1]);
        changed = true;
      }
    }
  }
  return out;
}

}  // namespace

BiangleDiagram turn_around(const BiangleDiagram& d) {
  std::vector<std::vector<Dir>> cs = cuts(d);
  std::vector<Dir> old_right = cs.back();
  int mr = static_cast<int>(old_right.size()), ml = static_cast<int>(d.left.size());

  BiangleDiagram r;
  for (Dir x : old_right) r.left.push_back(flip(x));

  std::vector<int> ascending(mr), descending(mr);
  for (int k = 0; k < mr; ++k) ascending[k] = k, descending[k] = mr - 1 - k;
  r.slices = slide(ascending, descending, r.left);

  for (size_t k = d.slices.size(); k-- > 0;) {
    Slice s = d.slices[k];
    int before = static_cast<int>(cs[k].size()), after = static_cast<int>(cs[k + 1].size());
    switch (s.type) {
      case Slice::Type::UTurn:
        s.pos = s.uturn.endpoints_on_left() ? before - 2 - s.pos : after - 2 - s.pos;
        s.uturn.decreasing = !s.uturn.decreasing;
        break;
      case Slice::Type::Crossing:
        s.pos = before - 2 - s.pos;
        s.crossing.over_to_lower = !s.crossing.over_to_lower;
        break;
      case Slice::Type::Kink:
        s.pos = before - 1 - s.pos;
        break;
      case Slice::Type::Trivial:
        s.pos = before - 1 - s.pos;
        s.orientation = flip(s.orientation);
        break;
    }
    r.slices.push_back(s);
  }

  std::vector<Dir> end_dirs;
  for (int k = ml - 1; k >= 0; --k) end_dirs.push_back(flip(d.left[k]));
  std::vector<int> rev(ml), asc(ml);
  for (int k = 0; k < ml; ++k) rev[k] = ml - 1 - k, asc[k] = k;
  for (const Slice& s : slide(rev, asc, end_dirs)) r.slices.push_back(s);
  return r;
}

BiangleDiagram concatenate(const BiangleDiagram& a, const BiangleDiagram& b) {
  if (right_boundary(a) != b.left) throw Error("concatenate: boundaries do not match");
  BiangleDiagram r = a;
  r.slices.insert(r.slices.end(), b.slices.begin(), b.slices.end());
  return r;
}

SkeinReport skein_checks(int n) {
  SkeinReport r{true, true, true, true, ""};
  std::ostringstream why;
  RibbonConstants rc = RibbonConstants::of(n);

  ScalarMatrix lhs = mat_add(mat_scale(crossing_same(n), RootScalar::q_power(n, -1, n)),
                             mat_scale(crossing_same_inverse(n), -RootScalar::q_power(n, 1, n)));
  ScalarMatrix rhs = mat_scale(scalar_identity(n * n), RootScalar::q_power(n, -1) - RootScalar::q_power(n, 1));
  r.homflypt = lhs == rhs;
  if (!r.homflypt) why << "HOMFLYPT identity fails; ";

  RootScalar unknot = rc.quantum_n * RootScalar((n - 1) % 2 == 0 ? 1 : -1);
  for (bool cw : {true, false}) {
    BiangleDiagram circle{{}, {Slice::make_uturn(0, {!cw, cw}), Slice::make_uturn(0, {cw, cw})}};
    RootScalar v = biangle_trace(circle, n, {}, {});
    if (!(v == unknot)) {
      r.unknot = false;
      why << "unknot (" << (cw ? "cw" : "ccw") << ") gives " << v.to_string() << "; ";
    }
  }

  for (Dir dir : {Dir::Right, Dir::Left}) {
    BiangleDiagram plain{{dir}, {}};
    BiangleDiagram twice{{dir}, {Slice::make_kink(0, true), Slice::make_kink(0, false)}};
    for (int s = 1; s <= n; ++s)
      for (int t = 1; t <= n; ++t)
        if (!(biangle_trace(plain, n, {s}, {t}) == biangle_trace(twice, n, {s}, {t}))) r.kinks_cancel = false;
  }
  if (!r.kinks_cancel) why << "opposite kinks do not cancel; ";

  // A curl drawn with a U-turn on each side and one crossing must equal the kink of the same sign.
  for (Dir dir : {Dir::Right, Dir::Left})
    for (bool first_over : {true, false}) {
      bool right = dir == Dir::Right;
      UTurnKind opening = right ? UTurnKind{true, false} : UTurnKind{false, true};
      UTurnKind closing = right ? UTurnKind{false, false} : UTurnKind{true, true};
      CrossingKind x = crossing_kind_from(dir, dir, first_over);
      BiangleDiagram curl{{dir}, {Slice::make_uturn(1, opening), Slice::make_crossing(0, x), Slice::make_uturn(1, closing)}};
      BiangleDiagram kink{{dir}, {Slice::make_kink(0, x.positive)}};
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
          if (!(biangle_trace(curl, n, {s}, {t}) == biangle_trace(kink, n, {s}, {t}))) {
            r.curl_matches_kink = false;
            why << "curl (" << (right ? "rightward" : "leftward") << ", " << (x.positive ? "positive" : "negative")
                << ") gives " << biangle_trace(curl, n, {s}, {t}).to_string() << " at " << s << "," << t << "; ";
          }
    }
  r.detail = why.str();
  return r;
}

}  // namespace qtrace
